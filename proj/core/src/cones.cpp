#include "setopt/cones.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "setopt/linalg.hpp"
#include "setopt/lp.hpp"

namespace setopt {

namespace {

constexpr std::size_t kGeneratorDimCap = 6;

// Calls fn(indices) for every size-k subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PolyhedralCone::PolyhedralCone(std::size_t dim, std::vector<Vector> facets, std::string label)
    : dim_(dim), facets_(std::move(facets)), label_(std::move(label)) {
  if (dim_ == 0) throw PreconditionError("DegenerateCone", "cone dimension must be positive");
  if (facets_.empty()) throw PreconditionError("DegenerateCone", "empty facet list describes the whole space");
  bool any_nonzero = false;
  for (const auto& a : facets_) {
    if (a.dim() != dim_) {
      throw PreconditionError("DimensionMismatch", "facet normal of dimension " + std::to_string(a.dim()) +
                                                       " in a cone of dimension " + std::to_string(dim_));
    }
    any_nonzero = any_nonzero || !a.is_zero();
  }
  if (!any_nonzero) throw PreconditionError("DegenerateCone", "all facet normals are zero (K = Y)");
}

PolyhedralCone PolyhedralCone::negated() const {
  std::vector<Vector> neg;
  neg.reserve(facets_.size());
  for (const auto& a : facets_) neg.push_back(-a);
  return PolyhedralCone(dim_, std::move(neg), label_.empty() ? std::string{} : "-" + label_);
}

bool PolyhedralCone::is_zero_cone() const {
  if (!is_pointed(*this)) return false;
  // For pointed K, any x != 0 in K has sum_i <a_i, x> > 0, so the LP below is
  // bounded exactly when K = {0}.
  lp::LinearProgram prog(dim_);
  for (std::size_t j = 0; j < dim_; ++j) prog.set_free(j);
  Vector total(dim_);
  for (const auto& a : facets_) {
    prog.add_constraint(a, lp::Relation::GreaterEq, 0);
    total += a;
  }
  prog.set_objective(-total);
  return lp::solve(prog).optimal();
}

PolyhedralCone cone_orthant(std::size_t dim) {
  std::vector<Vector> facets;
  for (std::size_t i = 0; i < dim; ++i) facets.push_back(Vector::unit(dim, i));
  return PolyhedralCone(dim, std::move(facets), "orthant");
}

PolyhedralCone cone_halfspace(const Vector& w) {
  if (w.is_zero()) throw PreconditionError("ZeroFunctional", "half-space normal must be nonzero");
  return PolyhedralCone(w.dim(), {w}, "halfspace");
}

PolyhedralCone cone_from_generators(const std::vector<Vector>& rays) {
  if (rays.empty()) throw PreconditionError("DegenerateCone", "no generators given");
  const std::size_t n = rays.front().dim();
  for (const auto& r : rays) require_same_dim(rays.front(), r, "cone generators");
  if (n > kGeneratorDimCap) {
    throw PreconditionError("DimensionCapExceeded",
                            "generator conversion supports dimension <= 6, got " + std::to_string(n));
  }

  auto complement = linalg::null_space(rays, n);
  const std::size_t span_dim = n - complement.size();
  std::set<Vector> facets;
  for (const auto& w : complement) {
    facets.insert(linalg::primitive(w));
    facets.insert(linalg::primitive(-w));
  }

  if (span_dim > 0) {
    for_each_subset(rays.size(), span_dim - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vector> rows = complement;
      for (auto i : idx) rows.push_back(rays[i]);
      auto normals = linalg::null_space(rows, n);
      if (normals.size() != 1) return;
      for (int s : {1, -1}) {
        Vector a = normals.front() * Rational(s);
        bool valid = true;
        bool strict = false;
        for (const auto& r : rays) {
          Rational v = dot(a, r);
          if (v < 0) {
            valid = false;
            break;
          }
          strict = strict || v > 0;
        }
        if (valid && strict) facets.insert(linalg::primitive(a));
      }
    });
  }

  if (facets.empty()) throw PreconditionError("DegenerateCone", "conic hull of the generators is the whole space");
  PolyhedralCone k(n, std::vector<Vector>(facets.begin(), facets.end()), "generated");
  for (const auto& r : rays) {
    if (!contains(k, r)) throw InternalError("ConeRoundTrip", "generator " + to_string(r) + " not contained");
  }
  return k;
}

bool is_pointed(const PolyhedralCone& k) { return linalg::rank(k.facets()) == k.dim(); }

bool contains(const PolyhedralCone& k, const Vector& y) {
  if (y.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "point and cone dimensions differ");
  return std::all_of(k.facets().begin(), k.facets().end(), [&](const Vector& a) { return dot(a, y) >= 0; });
}

bool is_interior(const PolyhedralCone& k, const Vector& y) {
  if (y.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "point and cone dimensions differ");
  return std::all_of(k.facets().begin(), k.facets().end(), [&](const Vector& a) { return dot(a, y) > 0; });
}

std::vector<Vector> dual_generators(const PolyhedralCone& k) { return k.facets(); }

bool in_dual_cone(const PolyhedralCone& k, const Vector& w) {
  require_same_dim(w, Vector(k.dim()), "dual cone membership");
  const auto& gens = k.facets();
  lp::LinearProgram prog(gens.size());
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vector row(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) row[g] = gens[g][i];
    prog.add_constraint(std::move(row), lp::Relation::Equal, w[i]);
  }
  return !lp::solve(prog).infeasible();
}

Direction::Direction(Vector e, const PolyhedralCone& k) : e_(std::move(e)) {
  if (e_.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "direction and cone dimensions differ");
  if (e_.is_zero() || !contains(k, e_)) {
    throw PreconditionError("DirectionNotInCone", "e = " + to_string(e_) + " is not in K \\ {0}");
  }
  interior_ = is_interior(k, e_);
}

Rational interior_margin(const PolyhedralCone& k, const Vector& e) {
  if (!is_interior(k, e)) throw PreconditionError("DirectionNotInterior", to_string(e) + " is not interior");
  std::optional<Rational> delta;
  for (const auto& ai : k.facets()) {
    for (const auto& aj : k.facets()) {
      Rational g = dot(ai, aj);
      if (g <= 0) continue;
      Rational cand = dot(ai, e) / g;
      if (!delta || cand < *delta) delta = cand;
    }
  }
  return delta.value_or(Rational(1));
}

}  // namespace setopt
