#include "setopt/relations.hpp"

#include <algorithm>

#include "setopt/lp.hpp"
#include "setopt/oracle.hpp"

namespace setopt {

namespace {

constexpr int kEscapeDoublings = 256;

RelationVerdict violated(const Vector& y, std::string note) {
  RelationVerdict out;
  out.holds = false;
  out.witness.point = y;
  out.note = std::move(note);
  return out;
}

// A finite set with a single distinct point behaves like the polytope {x}.
std::optional<VSet> as_polyhedron(const VSet& d) {
  if (d.is_polyhedron()) return d;
  const auto& pts = d.vertices();
  if (std::all_of(pts.begin(), pts.end(), [&](const Vector& x) { return x == pts.front(); })) {
    return VSet::polyhedron({pts.front()});
  }
  return std::nullopt;
}

// Exact test of C in D + M with a violating point on failure.
RelationVerdict containment(const VSet& c, const VSet& d, const PolyhedralCone& m) {
  if (c.dim() != d.dim() || c.dim() != m.dim()) {
    throw PreconditionError("DimensionMismatch", "relation operands differ in dimension");
  }
  if (c.is_points()) {
    for (const auto& y : c.vertices()) {
      if (!minkowski_member(y, d, m)) return violated(y, "point outside the cone extension");
    }
    return {};
  }
  auto dd = as_polyhedron(d);
  if (!dd) {
    throw PreconditionError("UnsupportedCombination",
                            "a polyhedron cannot be tested against a finite union of translated cones");
  }
  for (const auto& v : c.vertices()) {
    if (!minkowski_member(v, *dd, m)) return violated(v, "vertex outside the cone extension");
  }
  const VSet rec = VSet::polyhedron({Vector(c.dim())}, dd->rays());
  for (const auto& r : c.rays()) {
    if (minkowski_member(r, rec, m)) continue;
    // r leaves the recession cone of D + M, so far points along it leave D + M.
    const Vector& base = c.vertices().front();
    Rational t = 1;
    for (int i = 0; i < kEscapeDoublings; ++i, t *= 2) {
      Vector y = base + r * t;
      if (!minkowski_member(y, *dd, m)) return violated(y, "ray escapes the cone extension");
    }
    throw InternalError("RayEscape", "no violating point along ray " + to_string(r));
  }
  return {};
}

RelationVerdict conjunction(RelationVerdict a, RelationVerdict b, const char* first, const char* second) {
  if (!a.holds) {
    a.note = std::string(first) + ": " + a.note;
    return a;
  }
  if (!b.holds) {
    b.note = std::string(second) + ": " + b.note;
    return b;
  }
  RelationVerdict out;
  out.exactness = a.exact() && b.exact() ? RelationExactness::Exact : RelationExactness::SampledNegative;
  out.witness.assignment = a.witness.assignment;
  out.witness.assignment.insert(out.witness.assignment.end(), b.witness.assignment.begin(),
                                b.witness.assignment.end());
  return out;
}

bool in_union(const Vector& y, const SetFamily& cover, const PolyhedralCone& m) {
  return std::any_of(cover.members().begin(), cover.members().end(),
                     [&](const FamilyMember& d) { return minkowski_member(y, d.set, m); });
}

std::optional<VSet> certified_convex_union(const SetFamily& cover) {
  std::vector<Vector> all;
  for (const auto& d : cover.members()) {
    if (d.set.dim() != 2 || !d.set.is_polyhedron() || !d.set.is_bounded()) return std::nullopt;
    all.insert(all.end(), d.set.vertices().begin(), d.set.vertices().end());
  }
  VSet hull = VSet::polyhedron(convex_hull_2d(all));
  try {
    if (union_equals_2d(cover, SetFamily::singleton(hull))) return hull;
  } catch (const PreconditionError&) {
  }
  return std::nullopt;
}

// C in (union of cover) + M.
RelationVerdict union_member(const FamilyMember& c, const SetFamily& cover, const PolyhedralCone& m, int density,
                             const std::optional<VSet>& convex_cover) {
  auto label = [&](RelationVerdict v) {
    if (!v.holds) v.witness.left_label = c.label;
    return v;
  };
  if (c.set.is_points()) {
    for (const auto& y : c.set.vertices()) {
      if (!in_union(y, cover, m)) return label(violated(y, "point outside every member's extension"));
    }
    return {};
  }
  if (cover.size() == 1 && as_polyhedron(cover[0].set)) return label(containment(c.set, cover[0].set, m));
  for (const auto& d : cover.members()) {
    try {
      if (containment(c.set, d.set, m).holds) return {};
    } catch (const PreconditionError& err) {
      if (err.kind() != "UnsupportedCombination") throw;
    }
  }
  for (const auto& v : c.set.vertices()) {
    if (!in_union(v, cover, m)) return label(violated(v, "vertex outside every member's extension"));
  }
  if (convex_cover) {
    RelationVerdict v = containment(c.set, *convex_cover, m);
    v.note = v.holds ? "convex union certificate" : "outside the certified convex union";
    return label(v);
  }
  for (const auto& y : oracle::sample_set(c.set, density).points) {
    if (!in_union(y, cover, m)) return label(violated(y, "sample outside every member's extension"));
  }
  RelationVerdict out;
  out.exactness = RelationExactness::SampledNegative;
  out.note = "no violation on the sample grid";
  return out;
}

RelationVerdict union_containment(const SetFamily& covered, const SetFamily& cover, const PolyhedralCone& m,
                                  int density) {
  if (covered.dim() != cover.dim()) throw PreconditionError("DimensionMismatch", "families differ in dimension");
  const std::optional<VSet> convex_cover = cover.size() > 1 ? certified_convex_union(cover) : std::nullopt;
  RelationVerdict out;
  for (const auto& c : covered.members()) {
    RelationVerdict v = union_member(c, cover, m, density, convex_cover);
    if (!v.holds) return v;
    if (!v.exact()) {
      out.exactness = RelationExactness::SampledNegative;
      out.note = v.note;
    }
  }
  return out;
}

void require_family_dims(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  if (f.dim() != g.dim() || f.dim() != k.dim()) {
    throw PreconditionError("DimensionMismatch", "families and cone differ in dimension");
  }
}

ImplicationReport implication(RelationVerdict family, RelationVerdict unions, const char* name) {
  if (family.holds && !unions.holds) {
    throw InternalError("ImplicationViolation", std::string(name) + " holds but the union relation fails");
  }
  ImplicationReport out{std::move(family), std::move(unions), false};
  out.strict = out.unions.holds && !out.family.holds;
  return out;
}

struct SupInf {
  ExtReal value = ExtReal::neg_inf();
  bool exact = true;
};

// sup over `outer` members of inf over `inner` members of f(inner, outer).
template <typename Fn>
SupInf sup_inf_members(const SetFamily& outer, const SetFamily& inner, Fn fn) {
  SupInf out;
  for (const auto& o : outer.members()) {
    ExtReal best = ExtReal::pos_inf();
    for (const auto& i : inner.members()) {
      ScalarizationReport r = fn(i.set, o.set);
      if (r.exactness != Exactness::Exact) out.exact = false;
      best = std::min(best, r.value);
    }
    out.value = std::max(out.value, best);
  }
  return out;
}

CharacterizationReport characterized(SupInf a, std::optional<SupInf> b, RelationVerdict verdict) {
  CharacterizationReport out;
  out.value = a.value;
  bool nonpositive = a.value <= ExtReal(0);
  bool exact = a.exact;
  if (b) {
    out.second_value = b->value;
    nonpositive = nonpositive && b->value <= ExtReal(0);
    exact = exact && b->exact;
  }
  out.exactness = exact ? Exactness::Exact : Exactness::SampledLowerBound;
  out.consistent = nonpositive == verdict.holds;
  out.verdict = std::move(verdict);
  if (exact && out.verdict.exact() && !out.consistent) {
    throw InternalError("EquivalenceViolation",
                        "scalar value " + out.value.str() + " disagrees with the direct relation verdict");
  }
  return out;
}

MonotonicityReport monotone(RelationVerdict verdict, ExtReal left, ExtReal right, const char* name) {
  MonotonicityReport out{std::move(verdict), left, right, false};
  if (out.verdict.holds) {
    out.asserted = true;
    if (left > right) {
      throw InternalError("MonotonicityViolation", std::string(name) + " holds but " + left.str() + " > " +
                                                       right.str());
    }
  }
  return out;
}

// Is there w in sign * K*, normalized by sum(lambda) = 1, with
// sup_B <w,.> > sup_S <w,.> ? Returns such a w.
std::optional<Vector> support_breaker(const PolyhedralCone& k, const VSet& big, const VSet& small, int sign) {
  const auto& facets = k.facets();
  const std::size_t m = facets.size();
  const std::size_t n = k.dim();
  const Rational sg = sign;
  auto w_of = [&](const Vector& lambda) {
    Vector w(n);
    for (std::size_t i = 0; i < m; ++i) w += facets[i] * (sg * lambda[i]);
    return w;
  };
  // <w, x> as a row over the lambda variables.
  auto row_of = [&](const Vector& x, std::size_t vars) {
    Vector row(vars);
    for (std::size_t i = 0; i < m; ++i) row[i] = sg * dot(facets[i], x);
    return row;
  };
  auto base = [&](lp::LinearProgram& prog, std::size_t vars) {
    Vector sum(vars);
    for (std::size_t i = 0; i < m; ++i) sum[i] = 1;
    prog.add_constraint(std::move(sum), lp::Relation::Equal, 1);
    // Finite support of the smaller side: <w, r> <= 0 on its rays.
    for (const auto& r : small.rays()) prog.add_constraint(row_of(r, vars) * Rational(-1), lp::Relation::GreaterEq, 0);
  };

  for (const auto& r : big.rays()) {
    lp::LinearProgram prog(m);
    base(prog, m);
    prog.set_objective(row_of(r, m) * Rational(-1));
    auto res = lp::solve(prog);
    if (res.optimal() && res.value < 0) return w_of(res.point);
  }
  // Variables: lambda (m), s (free). Maximize s subject to <w, b - v> >= s.
  for (const auto& b : big.vertices()) {
    lp::LinearProgram prog(m + 1);
    prog.set_free(m);
    prog.set_objective_coeff(m, -1);
    base(prog, m + 1);
    for (const auto& v : small.vertices()) {
      Vector row = row_of(b - v, m + 1);
      row[m] = -1;
      prog.add_constraint(std::move(row), lp::Relation::GreaterEq, 0);
    }
    auto res = lp::solve(prog);
    if (res.unbounded()) throw InternalError("SupportLP", "normalized support LP unbounded");
    if (res.optimal() && -res.value > 0) {
      Vector lambda(m);
      for (std::size_t i = 0; i < m; ++i) lambda[i] = res.point[i];
      return w_of(lambda);
    }
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(RelationExactness x) { return x == RelationExactness::Exact ? "exact" : "sampled-negative"; }

RelationVerdict leq_l(const PolyhedralCone& k, const VSet& p, const VSet& q) { return containment(q, p, k); }

RelationVerdict leq_u(const PolyhedralCone& k, const VSet& p, const VSet& q) {
  return containment(p, q, k.negated());
}

RelationVerdict leq_s(const PolyhedralCone& k, const VSet& p, const VSet& q) {
  return conjunction(leq_l(k, p, q), leq_u(k, p, q), "l", "u");
}

RelationVerdict leq_L(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  require_family_dims(k, f, g);
  RelationVerdict out;
  for (const auto& lam : g.members()) {
    auto hit = std::find_if(f.members().begin(), f.members().end(),
                            [&](const FamilyMember& gam) { return leq_l(k, gam.set, lam.set).holds; });
    if (hit == f.members().end()) {
      RelationVerdict fail;
      fail.holds = false;
      fail.witness.right_label = lam.label;
      fail.note = "no member of the left family is l-below '" + lam.label + "'";
      return fail;
    }
    out.witness.assignment.emplace_back(hit->label, lam.label);
  }
  return out;
}

RelationVerdict leq_U(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  require_family_dims(k, f, g);
  RelationVerdict out;
  for (const auto& gam : f.members()) {
    auto hit = std::find_if(g.members().begin(), g.members().end(),
                            [&](const FamilyMember& lam) { return leq_u(k, gam.set, lam.set).holds; });
    if (hit == g.members().end()) {
      RelationVerdict fail;
      fail.holds = false;
      fail.witness.left_label = gam.label;
      fail.note = "'" + gam.label + "' is u-below no member of the right family";
      return fail;
    }
    out.witness.assignment.emplace_back(gam.label, hit->label);
  }
  return out;
}

RelationVerdict leq_S(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  return conjunction(leq_L(k, f, g), leq_U(k, f, g), "L", "U");
}

RelationVerdict union_leq_l(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g, int density) {
  require_family_dims(k, f, g);
  return union_containment(g, f, k, density);
}

RelationVerdict union_leq_u(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g, int density) {
  require_family_dims(k, f, g);
  return union_containment(f, g, k.negated(), density);
}

RelationVerdict union_leq_s(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g, int density) {
  return conjunction(union_leq_l(k, f, g, density), union_leq_u(k, f, g, density), "l", "u");
}

ImplicationReport check_L_implies_l(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  return implication(leq_L(k, f, g), union_leq_l(k, f, g), "L");
}

ImplicationReport check_U_implies_u(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  return implication(leq_U(k, f, g), union_leq_u(k, f, g), "U");
}

ImplicationReport check_S_implies_s(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g) {
  return implication(leq_S(k, f, g), union_leq_s(k, f, g), "S");
}

CharacterizationReport scalarization_characterize_L(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                                    const SetFamily& g) {
  require_family_dims(k, f, g);
  SupInf v = sup_inf_members(g, f, [&](const VSet& gam, const VSet& lam) { return z1_pair(k, e, gam, lam); });
  return characterized(v, std::nullopt, leq_L(k, f, g));
}

CharacterizationReport scalarization_characterize_U(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                                    const SetFamily& g) {
  require_family_dims(k, f, g);
  SupInf v = sup_inf_members(f, g, [&](const VSet& lam, const VSet& gam) { return z2_pair(k, e, gam, lam); });
  return characterized(v, std::nullopt, leq_U(k, f, g));
}

CharacterizationReport scalarization_characterize_S(const PolyhedralCone& k, const Vector& e1, const Vector& e2,
                                                    const SetFamily& f, const SetFamily& g) {
  require_family_dims(k, f, g);
  SupInf a = sup_inf_members(g, f, [&](const VSet& gam, const VSet& lam) { return z1_pair(k, e1, gam, lam); });
  SupInf b = sup_inf_members(f, g, [&](const VSet& lam, const VSet& gam) { return z2_pair(k, e2, gam, lam); });
  return characterized(a, b, leq_S(k, f, g));
}

MonotonicityReport scalar_monotonicity_L(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                         const SetFamily& g) {
  require_family_dims(k, f, g);
  ExtReal left = ExtReal::pos_inf();
  ExtReal right = ExtReal::pos_inf();
  for (const auto& m : f.members()) left = std::min(left, script_z1(k, e, m.set).value);
  for (const auto& m : g.members()) right = std::min(right, script_z1(k, e, m.set).value);
  return monotone(leq_L(k, f, g), left, right, "L");
}

MonotonicityReport scalar_monotonicity_U(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                         const SetFamily& g) {
  require_family_dims(k, f, g);
  ExtReal left = ExtReal::neg_inf();
  ExtReal right = ExtReal::neg_inf();
  for (const auto& m : f.members()) left = std::max(left, script_z2(k, e, m.set).value);
  for (const auto& m : g.members()) right = std::max(right, script_z2(k, e, m.set).value);
  return monotone(leq_U(k, f, g), left, right, "U");
}

DualSufficiencyReport dual_sufficiency_check(const PolyhedralCone& k, const VSet& p, const VSet& q,
                                             const std::vector<Vector>& probes, DualKind kind) {
  if (p.dim() != k.dim() || q.dim() != k.dim()) {
    throw PreconditionError("DimensionMismatch", "sets and cone differ in dimension");
  }
  const VSet& convex_side = kind == DualKind::U ? q : p;
  if (!as_polyhedron(convex_side)) {
    throw PreconditionError("UnsupportedCombination", "the closed convex side must be a polyhedron");
  }
  DualSufficiencyReport out;
  out.probe_premise = true;
  for (const auto& w : probes) {
    if (w.is_zero() || !in_dual_cone(k, w)) {
      throw PreconditionError("ProbeNotInDualCone", to_string(w) + " is not a nonzero element of the dual cone");
    }
    const PolyhedralCone kw = cone_halfspace(w);
    DualProbe pr{w, ExtReal(0), ExtReal(0), false};
    if (kind == DualKind::U) {
      pr.left = script_z2(kw, w, p).value;
      pr.right = script_z2(kw, w, q).value;
    } else {
      pr.left = script_z1(kw, w, p).value;
      pr.right = script_z1(kw, w, q).value;
    }
    pr.premise = pr.left <= pr.right;
    out.probe_premise = out.probe_premise && pr.premise;
    out.probes.push_back(std::move(pr));
  }
  const VSet small = *as_polyhedron(convex_side);
  out.breaking_w = kind == DualKind::U ? support_breaker(k, p, small, 1) : support_breaker(k, q, small, -1);
  if (out.breaking_w && kind == DualKind::L) out.breaking_w = -*out.breaking_w;
  out.exact_premise = !out.breaking_w;
  out.verdict = kind == DualKind::U ? leq_u(k, p, q) : leq_l(k, p, q);
  if (out.exact_premise && !out.verdict.holds) {
    throw InternalError("DualSufficiency", "support premise holds on all of K* but the relation fails");
  }
  return out;
}

}  // namespace setopt
