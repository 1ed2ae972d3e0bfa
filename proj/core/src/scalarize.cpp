#include "setopt/scalarize.hpp"

#include <optional>

#include "setopt/lp.hpp"

namespace setopt {

namespace {

constexpr std::size_t kSelectionCap = 4096;

void require_direction(const PolyhedralCone& k, const Vector& e) { Direction check(e, k); }

void require_dims(const PolyhedralCone& k, const Vector& e, const VSet& a) {
  if (e.dim() != k.dim() || a.dim() != k.dim()) {
    throw PreconditionError("DimensionMismatch", "cone, direction and sets must share one dimension");
  }
}

bool cheap_proper(const VSet& p, const PolyhedralCone& k) {
  return p.is_bounded() || is_K_proper(p, k).proper;
}

Vector combine(const VSet& s, const Vector& x, std::size_t offset) {
  Vector out(s.dim());
  const auto& vs = s.vertices();
  const auto& rs = s.rays();
  for (std::size_t v = 0; v < vs.size(); ++v) out += vs[v] * x[offset + v];
  for (std::size_t r = 0; r < rs.size(); ++r) out += rs[r] * x[offset + vs.size() + r];
  return out;
}

// inf over s in S of z^{e,K}(sign * (s - c)).
InnerValue inner_general(const PolyhedralCone& k, const Vector& e, const VSet& s, const Vector& c, int sign) {
  InnerValue out{ExtReal::pos_inf(), std::nullopt, std::nullopt};
  if (s.is_points()) {
    for (const auto& pt : s.vertices()) {
      ExtReal v = z_value_any(k, e, (pt - c) * Rational(sign));
      if (!out.argmin || v < out.value) {
        out.value = v;
        out.argmin = pt;
      }
    }
    return out;
  }
  // Variables: t (free), lambda per vertex, mu per ray.
  const auto& vs = s.vertices();
  const auto& rs = s.rays();
  const std::size_t n = 1 + vs.size() + rs.size();
  lp::LinearProgram prog(n);
  prog.set_free(0);
  prog.set_objective_coeff(0, 1);
  const Rational sg = sign;
  for (const auto& a : k.facets()) {
    Vector row(n);
    row[0] = dot(a, e);
    for (std::size_t v = 0; v < vs.size(); ++v) row[1 + v] = -sg * dot(a, vs[v]);
    for (std::size_t r = 0; r < rs.size(); ++r) row[1 + vs.size() + r] = -sg * dot(a, rs[r]);
    prog.add_constraint(std::move(row), lp::Relation::GreaterEq, -sg * dot(a, c));
  }
  Vector sum(n);
  for (std::size_t v = 0; v < vs.size(); ++v) sum[1 + v] = 1;
  prog.add_constraint(std::move(sum), lp::Relation::Equal, 1);

  auto res = lp::solve(prog);
  if (res.infeasible()) {
    out.argmin.reset();
    return out;
  }
  out.argmin = combine(s, res.point, 1);
  if (res.unbounded()) {
    out.value = ExtReal::neg_inf();
    out.ray = res.ray;
    return out;
  }
  out.value = res.value;
  return out;
}

VSet recession_of(const VSet& s) { return VSet::polyhedron({Vector(s.dim())}, s.rays()); }

// sup over o in `outer` of min over the finitely many inner points, for e with
// every <a, e> > 0. The min of maxima is expanded into one LP per choice of
// active facet per inner point.
std::optional<ScalarizationReport> sup_min_points(const PolyhedralCone& k, const Vector& e, const VSet& outer,
                                                  const VSet& inner, int sign) {
  const auto& facets = k.facets();
  const auto& pts = inner.vertices();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    combos *= facets.size();
    if (combos > kSelectionCap) return std::nullopt;
  }
  const auto& vs = outer.vertices();
  const auto& rs = outer.rays();
  const std::size_t n = 1 + vs.size() + rs.size();
  const Rational sg = sign;

  ScalarizationReport best;
  best.value = ExtReal::neg_inf();
  std::vector<std::size_t> pick(pts.size(), 0);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    std::size_t rest = combo;
    for (auto& p : pick) {
      p = rest % facets.size();
      rest /= facets.size();
    }
    lp::LinearProgram prog(n);
    prog.set_free(0);
    prog.set_objective_coeff(0, -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vector& a = facets[pick[i]];
      Vector row(n);
      row[0] = -dot(a, e);
      for (std::size_t v = 0; v < vs.size(); ++v) row[1 + v] = -sg * dot(a, vs[v]);
      for (std::size_t r = 0; r < rs.size(); ++r) row[1 + vs.size() + r] = -sg * dot(a, rs[r]);
      prog.add_constraint(std::move(row), lp::Relation::GreaterEq, -sg * dot(a, pts[i]));
    }
    Vector sum(n);
    for (std::size_t v = 0; v < vs.size(); ++v) sum[1 + v] = 1;
    prog.add_constraint(std::move(sum), lp::Relation::Equal, 1);
    auto res = lp::solve(prog);
    if (res.unbounded()) {
      best.value = ExtReal::pos_inf();
      best.attained_outer.reset();
      best.attained_inner.reset();
      Vector dir = combine(outer, res.ray, 1);
      best.outer_ray = dir;
      return best;
    }
    if (res.optimal() && ExtReal(res.value) > best.value) {
      best.value = res.value;
      best.attained_outer = combine(outer, res.point, 1);
    }
  }
  if (best.attained_outer) {
    best.attained_inner = inner_general(k, e, inner, *best.attained_outer, sign).argmin;
  }
  return best;
}

bool interior_direction(const PolyhedralCone& k, const Vector& e) { return is_interior(k, e); }

// sup over o in outer of inf over s in inner of z(sign * (s - o)).
ScalarizationReport sup_inf(const PolyhedralCone& k, const Vector& e, const VSet& outer, const VSet& inner, int sign) {
  ScalarizationReport rep;
  rep.value = ExtReal::neg_inf();
  auto consider = [&](const Vector& o) {
    InnerValue iv = inner_general(k, e, inner, o, sign);
    if (!rep.attained_outer || iv.value > rep.value) {
      rep.value = iv.value;
      rep.attained_outer = o;
      rep.attained_inner = iv.argmin;
      rep.inner_ray = iv.ray;
    }
  };

  if (outer.is_points()) {
    for (const auto& o : outer.vertices()) consider(o);
    return rep;
  }

  if (inner.is_points() && inner.vertices().size() > 1) {
    // min over points is not convex in the outer variable: vertices do not suffice.
    if (interior_direction(k, e)) {
      if (auto exact = sup_min_points(k, e, outer, inner, sign)) return *exact;
    }
    for (const auto& o : outer.vertices()) consider(o);
    if (!outer.is_bounded()) {
      for (const auto& d : outer.rays()) consider(outer.vertices().front() + d);
    }
    rep.exactness = Exactness::SampledLowerBound;
    return rep;
  }

  // Convex piecewise-linear value function: vertices plus recession analysis.
  for (const auto& o : outer.vertices()) consider(o);
  if (rep.value.is_pos_inf()) return rep;
  const VSet inner_rec = inner.is_points() ? VSet::polyhedron({Vector(inner.dim())}) : recession_of(inner);
  for (const auto& d : outer.rays()) {
    InnerValue rec = inner_general(k, e, inner_rec, d, sign);
    if (rec.value > ExtReal(0)) {
      rep.value = ExtReal::pos_inf();
      rep.attained_outer.reset();
      rep.attained_inner.reset();
      rep.inner_ray.reset();
      rep.outer_ray = d;
      return rep;
    }
  }
  return rep;
}

ScalarizationReport pair_checked(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q,
                                 bool first, bool check) {
  require_dims(k, e, p);
  require_dims(k, e, q);
  if (check) require_direction(k, e);
  ScalarizationReport rep = first ? sup_inf(k, e, q, p, 1) : sup_inf(k, e, p, q, -1);
  rep.k_proper = cheap_proper(p, k) && cheap_proper(q, k);
  return rep;
}

}  // namespace

const char* to_string(Exactness x) { return x == Exactness::Exact ? "exact" : "sampled-lower-bound"; }

ExtReal z_value_any(const PolyhedralCone& k, const Vector& e, const Vector& y) {
  if (e.dim() != k.dim() || y.dim() != k.dim()) {
    throw PreconditionError("DimensionMismatch", "cone, direction and point must share one dimension");
  }
  // t * <a,e> >= <a,y> for every facet a.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  for (const auto& a : k.facets()) {
    Rational ae = dot(a, e);
    Rational ay = dot(a, y);
    if (ae == 0) {
      if (ay > 0) return ExtReal::pos_inf();
      continue;
    }
    Rational bound = ay / ae;
    if (ae > 0) {
      if (!lower || bound > *lower) lower = bound;
    } else if (!upper || bound < *upper) {
      upper = bound;
    }
  }
  if (lower && upper && *lower > *upper) return ExtReal::pos_inf();
  if (!lower) return ExtReal::neg_inf();
  return *lower;
}

ExtReal z_value(const PolyhedralCone& k, const Vector& e, const Vector& y) {
  require_direction(k, e);
  return z_value_any(k, e, y);
}

InnerValue inner_inf(const PolyhedralCone& k, const Vector& e, const VSet& p, const Vector& q) {
  require_dims(k, e, p);
  require_direction(k, e);
  if (q.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "point dimension differs from the cone");
  return inner_general(k, e, p, q, 1);
}

ScalarizationReport z1_pair(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q) {
  return pair_checked(k, e, p, q, true, true);
}

ScalarizationReport z2_pair(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q) {
  return pair_checked(k, e, p, q, false, true);
}

ScalarizationReport z1_pair_any(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q) {
  return pair_checked(k, e, p, q, true, false);
}

ScalarizationReport z2_pair_any(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q) {
  return pair_checked(k, e, p, q, false, false);
}

ScalarizationReport script_z1(const PolyhedralCone& k, const Vector& e, const VSet& p) {
  require_dims(k, e, p);
  require_direction(k, e);
  InnerValue iv = inner_general(k, e, p, Vector(k.dim()), 1);
  ScalarizationReport rep;
  rep.value = iv.value;
  rep.attained_inner = iv.argmin;
  rep.inner_ray = iv.ray;
  rep.k_proper = cheap_proper(p, k);
#ifndef NDEBUG
  if (z1_pair(k, e, p, VSet::points({Vector(k.dim())})).value != rep.value) {
    throw InternalError("ScriptZIdentity", "inf over P of z differs from Z1(P, {0})");
  }
#endif
  return rep;
}

ScalarizationReport script_z2(const PolyhedralCone& k, const Vector& e, const VSet& p) {
  require_dims(k, e, p);
  require_direction(k, e);
  ScalarizationReport rep;
  rep.value = ExtReal::neg_inf();
  for (const auto& v : p.vertices()) {
    ExtReal z = z_value_any(k, e, v);
    if (!rep.attained_outer || z > rep.value) {
      rep.value = z;
      rep.attained_outer = v;
    }
  }
  // z is sublinear, so along a ray it grows iff z(ray) > 0.
  for (const auto& r : p.rays()) {
    if (z_value_any(k, e, r) > ExtReal(0)) {
      rep.value = ExtReal::pos_inf();
      rep.attained_outer.reset();
      rep.outer_ray = r;
      break;
    }
  }
  rep.k_proper = cheap_proper(p, k);
#ifndef NDEBUG
  if (z2_pair(k, e, p, VSet::points({Vector(k.dim())})).value != rep.value) {
    throw InternalError("ScriptZIdentity", "sup over P of z differs from Z2(P, {0})");
  }
#endif
  return rep;
}

ScalarizationReport g_e(const Vector& e_neg, const PolyhedralCone& k, const VSet& a, const VSet& b) {
  if (e_neg.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "direction and cone dimensions differ");
  if (!is_interior(k, -e_neg)) {
    throw PreconditionError("DirectionNotNegativeInterior", to_string(e_neg) + " is not in -int(K)");
  }
  ScalarizationReport via_z1 = z1_pair(k, -e_neg, a, b);
  ScalarizationReport via_phi = z2_pair(k.negated(), e_neg, b, a);
  if (via_z1.exactness == Exactness::Exact && via_phi.exactness == Exactness::Exact &&
      via_z1.value != via_phi.value) {
    throw InternalError("GeIdentity", "Z1^{-e,K}(A,B) = " + via_z1.value.str() + " but Z2^{e,-K}(B,A) = " +
                                          via_phi.value.str());
  }
  return via_z1;
}

ImpropernessReport improperness_demo(const PolyhedralCone& k, const Vector& e, const std::vector<Vector>& samples) {
  if (is_pointed(k)) throw PreconditionError("ConePointed", "the cone is pointed; z is proper");
  if (e.dim() != k.dim()) throw PreconditionError("DimensionMismatch", "direction and cone dimensions differ");
  if (e.is_zero() || !contains(k, e) || !contains(k, -e)) {
    throw PreconditionError("DirectionNotInLineality", to_string(e) + " is not in K ∩ (-K) \\ {0}");
  }
  ImpropernessReport rep;
  for (const auto& y : samples) {
    ExtReal v = z_value_any(k, e, y);
    bool predicted = contains(k, -y);
    bool ok = predicted ? v.is_neg_inf() : v.is_pos_inf();
    rep.consistent = rep.consistent && ok;
    rep.samples.push_back({y, v, predicted});
  }
  return rep;
}

IntersectionLemmaReport check_intersection_lemma(const VSet& p, const PolyhedralCone& k, const Vector& e,
                                                 const std::vector<Rational>& alphas,
                                                 const std::vector<Vector>& probes) {
  require_dims(k, e, p);
  require_direction(k, e);
  for (const auto& a : alphas) {
    if (a <= 0) throw PreconditionError("NonPositiveAlpha", "alphas must be positive, got " + to_string(a));
  }
  IntersectionLemmaReport rep;
  for (const auto& y : probes) {
    IntersectionLemmaReport::Probe pr;
    pr.y = y;
    pr.in_p_plus_k = minkowski_member(y, p, k);
    if (pr.in_p_plus_k) {
      for (const auto& a : alphas) {
        if (!minkowski_member(y + e * a, p, k)) pr.in_every_shift = false;
      }
      rep.holds = rep.holds && pr.in_every_shift;
    } else {
      Rational alpha = 1;
      pr.search_exhausted = true;
      for (int i = 0; i <= 60; ++i, alpha /= 2) {
        if (!minkowski_member(y + e * alpha, p, k)) {
          pr.excluding_alpha = alpha;
          pr.search_exhausted = false;
          break;
        }
      }
    }
    rep.probes.push_back(std::move(pr));
  }
  return rep;
}

}  // namespace setopt
