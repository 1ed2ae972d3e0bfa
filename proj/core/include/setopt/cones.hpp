#ifndef SETOPT_CONES_HPP
#define SETOPT_CONES_HPP

#include <string>
#include <vector>

#include "setopt/numeric.hpp"

namespace setopt {

/// Closed convex polyhedral cone K = {x : <a_i, x> >= 0 for all facets a_i}.
///
/// The facet list is the single source of truth; generator input goes
/// through cone_from_generators once. At least one facet normal must be
/// nonzero, which rules out K = Y. K = {0} is representable.
class PolyhedralCone {
 public:
  /// Throws PreconditionError("DegenerateCone") for an empty or all-zero facet list,
  /// "DimensionMismatch" for inconsistent normals.
  PolyhedralCone(std::size_t dim, std::vector<Vector> facets, std::string label = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Vector>& facets() const noexcept { return facets_; }
  const std::string& label() const noexcept { return label_; }

  /// -K, i.e. every facet normal negated.
  PolyhedralCone negated() const;

  /// K = {0}. Only a diagnostic: no ordering cone in practice looks like this.
  bool is_zero_cone() const;

 private:
  std::size_t dim_;
  std::vector<Vector> facets_;
  std::string label_;
};

/// Nonnegative orthant R^dim_+.
PolyhedralCone cone_orthant(std::size_t dim);

/// Half-space K_w = {y : <w, y> >= 0}. Throws PreconditionError("ZeroFunctional") for w = 0.
PolyhedralCone cone_halfspace(const Vector& w);

/// Facet representation of the conic hull of `rays` (dimension <= 6).
/// Throws PreconditionError("DimensionCapExceeded") / ("DegenerateCone") when
/// the hull is the whole space.
PolyhedralCone cone_from_generators(const std::vector<Vector>& rays);

/// Lineality space is {0}, i.e. the facet matrix has full column rank.
bool is_pointed(const PolyhedralCone& k);

bool contains(const PolyhedralCone& k, const Vector& y);
/// All facet inequalities strict. Always false for cones with empty interior.
bool is_interior(const PolyhedralCone& k, const Vector& y);

/// Generators of the dual cone K* (the facet normals).
std::vector<Vector> dual_generators(const PolyhedralCone& k);

/// Is w in K* = cone(facet normals)? Decided exactly by an LP.
bool in_dual_cone(const PolyhedralCone& k, const Vector& w);

/// A reference direction e in K \ {0}.
class Direction {
 public:
  /// Throws PreconditionError("DirectionNotInCone") unless e is a nonzero member of k.
  Direction(Vector e, const PolyhedralCone& k);

  const Vector& vec() const noexcept { return e_; }
  bool interior() const noexcept { return interior_; }

 private:
  Vector e_;
  bool interior_;
};

/// For e in int(K): a rational delta > 0 such that e - delta * a stays in K
/// for every facet normal a. Throws PreconditionError if e is not interior.
Rational interior_margin(const PolyhedralCone& k, const Vector& e);

}  // namespace setopt

#endif  // SETOPT_CONES_HPP
