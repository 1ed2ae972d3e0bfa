#ifndef SETOPT_SETS_HPP
#define SETOPT_SETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"

namespace setopt {

/// A nonempty set in the image space: either a finite point set (possibly
/// non-convex) or a convex polyhedron conv(vertices) + cone(rays).
/// Vertex lists may contain redundant or repeated points.
class VSet {
 public:
  enum class Kind { FinitePoints, Polyhedron };

  static VSet points(std::vector<Vector> pts);
  static VSet polyhedron(std::vector<Vector> vertices, std::vector<Vector> rays = {});

  Kind kind() const noexcept { return kind_; }
  bool is_points() const noexcept { return kind_ == Kind::FinitePoints; }
  bool is_polyhedron() const noexcept { return kind_ == Kind::Polyhedron; }
  std::size_t dim() const noexcept { return dim_; }
  /// The points (FinitePoints) or the vertices (Polyhedron).
  const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  const std::vector<Vector>& rays() const noexcept { return rays_; }
  bool is_bounded() const;

  /// The set translated by t.
  VSet translated(const Vector& t) const;

 private:
  VSet(Kind kind, std::vector<Vector> vertices, std::vector<Vector> rays);
  Kind kind_;
  std::size_t dim_;
  std::vector<Vector> vertices_;
  std::vector<Vector> rays_;
};

struct FamilyMember {
  std::string label;
  VSet set;
};

/// Indexed family {P_gamma}; the object of the union-indexed relations.
/// Members are kept in insertion order, labels are unique.
class SetFamily {
 public:
  explicit SetFamily(std::vector<FamilyMember> members);
  static SetFamily singleton(VSet set, std::string label = "0");

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<FamilyMember>& members() const noexcept { return members_; }
  const FamilyMember& operator[](std::size_t i) const { return members_[i]; }

 private:
  std::size_t dim_;
  std::vector<FamilyMember> members_;
};

/// Exact membership q in P (Polyhedron via LP feasibility).
bool set_contains(const VSet& p, const Vector& q);

/// q in P + K.
bool minkowski_member(const Vector& q, const VSet& p, const PolyhedralCone& k);

struct ProperReport {
  bool proper = true;
  /// A point certified outside P + K when proper.
  std::optional<Vector> outside_point;
};

/// P + K != Y, with an exact witness point outside P + K.
ProperReport is_K_proper(const VSet& p, const PolyhedralCone& k);

// ---- exact planar geometry --------------------------------------------------

/// Convex hull, counter-clockwise, collinear points dropped. A segment comes back
/// as its two endpoints and a point as itself.
std::vector<Vector> convex_hull_2d(std::vector<Vector> pts);

/// Intersection of two bounded planar polyhedra; nullopt when empty.
/// Lower-dimensional intersections (segments, points) are returned as such.
std::optional<VSet> polygon_clip_2d(const VSet& p, const VSet& q);

/// Shoelace area of the convex hull of the vertices.
Rational polygon_area_2d(const VSet& p);

/// Equality of the unions of two families of bounded, full-dimensional planar
/// polyhedra (at most 6 members each), decided by an exact coverage-by-area test.
bool union_equals_2d(const SetFamily& f, const SetFamily& g);

/// Every member of `covered` lies inside the union of `cover` (same preconditions).
bool union_covers_2d(const SetFamily& cover, const SetFamily& covered);

}  // namespace setopt

#endif  // SETOPT_SETS_HPP
