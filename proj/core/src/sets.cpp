#include "setopt/sets.hpp"

#include <algorithm>
#include <set>

#include "setopt/lp.hpp"

namespace setopt {

namespace {

constexpr std::size_t kUnionMemberCap = 6;

std::size_t common_dim(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty()) throw PreconditionError("EmptySet", "a set needs at least one point or vertex");
  const std::size_t dim = a.front().dim();
  if (dim == 0) throw PreconditionError("DimensionMismatch", "zero-dimensional vectors");
  for (const auto& v : a) require_same_dim(a.front(), v, "set vertices");
  for (const auto& v : b) require_same_dim(a.front(), v, "set rays");
  return dim;
}

}  // namespace

VSet::VSet(Kind kind, std::vector<Vector> vertices, std::vector<Vector> rays)
    : kind_(kind), dim_(common_dim(vertices, rays)), vertices_(std::move(vertices)), rays_(std::move(rays)) {}

VSet VSet::points(std::vector<Vector> pts) { return VSet(Kind::FinitePoints, std::move(pts), {}); }

VSet VSet::polyhedron(std::vector<Vector> vertices, std::vector<Vector> rays) {
  std::erase_if(rays, [](const Vector& r) { return r.is_zero(); });
  return VSet(Kind::Polyhedron, std::move(vertices), std::move(rays));
}

bool VSet::is_bounded() const { return rays_.empty(); }

VSet VSet::translated(const Vector& t) const {
  std::vector<Vector> moved;
  moved.reserve(vertices_.size());
  for (const auto& v : vertices_) moved.push_back(v + t);
  return VSet(kind_, std::move(moved), rays_);
}

SetFamily::SetFamily(std::vector<FamilyMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("EmptyFamily", "a family needs at least one member");
  dim_ = members_.front().set.dim();
  std::set<std::string> seen;
  for (const auto& m : members_) {
    if (m.set.dim() != dim_) throw PreconditionError("DimensionMismatch", "family members differ in dimension");
    if (!seen.insert(m.label).second) throw PreconditionError("DuplicateLabel", "label '" + m.label + "' repeated");
  }
}

SetFamily SetFamily::singleton(VSet set, std::string label) {
  return SetFamily({FamilyMember{std::move(label), std::move(set)}});
}

bool set_contains(const VSet& p, const Vector& q) {
  require_same_dim(q, p.vertices().front(), "set membership");
  if (p.is_points()) return std::find(p.vertices().begin(), p.vertices().end(), q) != p.vertices().end();
  const auto& vs = p.vertices();
  const auto& rs = p.rays();
  lp::LinearProgram prog(vs.size() + rs.size());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Vector row(vs.size() + rs.size());
    for (std::size_t v = 0; v < vs.size(); ++v) row[v] = vs[v][i];
    for (std::size_t r = 0; r < rs.size(); ++r) row[vs.size() + r] = rs[r][i];
    prog.add_constraint(std::move(row), lp::Relation::Equal, q[i]);
  }
  Vector sum(vs.size() + rs.size());
  for (std::size_t v = 0; v < vs.size(); ++v) sum[v] = 1;
  prog.add_constraint(std::move(sum), lp::Relation::Equal, 1);
  return !lp::solve(prog).infeasible();
}

bool minkowski_member(const Vector& q, const VSet& p, const PolyhedralCone& k) {
  require_same_dim(q, p.vertices().front(), "Minkowski membership");
  if (q.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "cone and point dimensions differ");
  if (p.is_points()) {
    return std::any_of(p.vertices().begin(), p.vertices().end(),
                       [&](const Vector& x) { return contains(k, q - x); });
  }
  // q - sum(lambda_v v) - sum(mu_r r) in K, lambda on the simplex, mu >= 0.
  const auto& vs = p.vertices();
  const auto& rs = p.rays();
  lp::LinearProgram prog(vs.size() + rs.size());
  for (const auto& a : k.facets()) {
    Vector row(vs.size() + rs.size());
    for (std::size_t v = 0; v < vs.size(); ++v) row[v] = -dot(a, vs[v]);
    for (std::size_t r = 0; r < rs.size(); ++r) row[vs.size() + r] = -dot(a, rs[r]);
    prog.add_constraint(std::move(row), lp::Relation::GreaterEq, -dot(a, q));
  }
  Vector sum(vs.size() + rs.size());
  for (std::size_t v = 0; v < vs.size(); ++v) sum[v] = 1;
  prog.add_constraint(std::move(sum), lp::Relation::Equal, 1);
  return !lp::solve(prog).infeasible();
}

ProperReport is_K_proper(const VSet& p, const PolyhedralCone& k) {
  const std::size_t n = p.dim();
  // Finite unions of translates of K != Y stay inside a half-space, as do
  // polyhedra whose recession cone cone(rays) + K is not the whole space.
  const VSet recession = VSet::polyhedron({Vector(n)}, p.rays());
  std::optional<Vector> escape;
  for (std::size_t j = 0; j < n && !escape; ++j) {
    for (int s : {1, -1}) {
      Vector d = Vector::unit(n, j) * Rational(s);
      bool in_recession = p.is_points() ? contains(k, d) : minkowski_member(d, recession, k);
      if (!in_recession) {
        escape = d;
        break;
      }
    }
  }
  if (!escape) return {false, std::nullopt};
  const Vector& base = p.vertices().front();
  Rational step = 1;
  for (int it = 0; it < 256; ++it, step *= 2) {
    Vector y = base + *escape * step;
    if (!minkowski_member(y, p, k)) return {true, y};
  }
  throw InternalError("ProperWitness", "no point outside P + K found along " + to_string(*escape));
}

// ---- planar geometry ---------------------------------------------------------

namespace {

Rational cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

struct HalfPlane {
  Vector normal;
  Rational offset;  // normal . x >= offset
};

std::vector<HalfPlane> halfplanes_of_hull(const std::vector<Vector>& hull) {
  std::vector<HalfPlane> out;
  if (hull.size() >= 3) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vector& a = hull[i];
      const Vector& b = hull[(i + 1) % hull.size()];
      Vector n{-(b[1] - a[1]), b[0] - a[0]};
      out.push_back({n, dot(n, a)});
    }
  } else if (hull.size() == 2) {
    const Vector& a = hull[0];
    const Vector& b = hull[1];
    Vector d = b - a;
    Vector n{-d[1], d[0]};
    out.push_back({n, dot(n, a)});
    out.push_back({-n, -dot(n, a)});
    out.push_back({d, dot(d, a)});
    out.push_back({-d, -dot(d, b)});
  } else {
    const Vector& a = hull[0];
    for (std::size_t i = 0; i < 2; ++i) {
      Vector e = Vector::unit(2, i);
      out.push_back({e, a[i]});
      out.push_back({-e, -a[i]});
    }
  }
  return out;
}

std::vector<Vector> clip_by(const std::vector<Vector>& poly, const HalfPlane& h) {
  std::vector<Vector> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& cur = poly[i];
    const Vector& nxt = poly[(i + 1) % n];
    Rational vc = dot(h.normal, cur) - h.offset;
    Rational vn = dot(h.normal, nxt) - h.offset;
    if (vc >= 0) out.push_back(cur);
    if ((vc >= 0) != (vn >= 0)) {
      Rational t = vc / (vc - vn);
      out.push_back(cur + (nxt - cur) * t);
    }
  }
  return out;
}

void require_planar_bounded(const VSet& p, std::string_view where) {
  if (p.dim() != 2) throw PreconditionError("DimensionMismatch", std::string(where) + " needs planar sets");
  if (!p.is_polyhedron() || !p.is_bounded()) {
    throw PreconditionError("UnboundedInput", std::string(where) + " needs bounded polyhedra");
  }
}

Rational hull_area(const std::vector<Vector>& hull) {
  if (hull.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vector& a = hull[i];
    const Vector& b = hull[(i + 1) % hull.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / 2;
}

void require_family(const SetFamily& f, bool positive_area) {
  if (f.size() > kUnionMemberCap) {
    throw PreconditionError("FamilyTooLarge", "union checks support at most 6 members, got " +
                                                  std::to_string(f.size()));
  }
  for (const auto& m : f.members()) {
    require_planar_bounded(m.set, "union check");
    if (positive_area && polygon_area_2d(m.set) == 0) {
      throw PreconditionError("DegenerateMember", "member '" + m.label + "' has zero area");
    }
  }
}

// Signed inclusion-exclusion sum of area(region ∩ cover_S) over nonempty S ⊆ cover[start..].
Rational covered_area(const VSet& region, const SetFamily& cover, std::size_t start, int sign) {
  Rational total = 0;
  for (std::size_t j = start; j < cover.size(); ++j) {
    auto inter = polygon_clip_2d(region, cover[j].set);
    if (!inter) continue;
    Rational a = polygon_area_2d(*inter);
    if (a == 0) continue;
    total += sign * a;
    total += covered_area(*inter, cover, j + 1, -sign);
  }
  return total;
}

}  // namespace

std::vector<Vector> convex_hull_2d(std::vector<Vector> pts) {
  for (const auto& p : pts) {
    if (p.dim() != 2) throw PreconditionError("DimensionMismatch", "convex_hull_2d needs planar points");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Vector> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

std::optional<VSet> polygon_clip_2d(const VSet& p, const VSet& q) {
  require_planar_bounded(p, "polygon_clip_2d");
  require_planar_bounded(q, "polygon_clip_2d");
  std::vector<Vector> poly = convex_hull_2d(p.vertices());
  for (const auto& h : halfplanes_of_hull(convex_hull_2d(q.vertices()))) {
    poly = clip_by(poly, h);
    if (poly.empty()) return std::nullopt;
  }
  return VSet::polyhedron(convex_hull_2d(std::move(poly)));
}

Rational polygon_area_2d(const VSet& p) {
  require_planar_bounded(p, "polygon_area_2d");
  return hull_area(convex_hull_2d(p.vertices()));
}

bool union_covers_2d(const SetFamily& cover, const SetFamily& covered) {
  require_family(cover, false);
  require_family(covered, true);
  return std::all_of(covered.members().begin(), covered.members().end(), [&](const FamilyMember& m) {
    return covered_area(m.set, cover, 0, 1) == polygon_area_2d(m.set);
  });
}

bool union_equals_2d(const SetFamily& f, const SetFamily& g) {
  require_family(f, true);
  require_family(g, true);
  return union_covers_2d(f, g) && union_covers_2d(g, f);
}

}  // namespace setopt
