#include "setopt/papersuite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "setopt/generate.hpp"
#include "setopt/io.hpp"
#include "setopt/oracle.hpp"
#include "setopt/relations.hpp"
#include "setopt/scalarize.hpp"

namespace setopt::papersuite {

namespace {

using usop::Relation;

std::string yn(bool b) { return b ? "true" : "false"; }

struct Recorder {
  CaseResult& out;

  void expect(std::string name, bool ok, std::string expected, std::string actual, bool oracle = false) {
    out.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok, oracle});
  }
  void truth(std::string name, bool actual, bool expected, bool oracle = false) {
    expect(std::move(name), actual == expected, yn(expected), yn(actual), oracle);
  }
  void value(std::string name, const ExtReal& actual, const ExtReal& expected, bool oracle = false) {
    expect(std::move(name), actual == expected, expected.str(), actual.str(), oracle);
  }
  void positive(std::string name, const ExtReal& actual) {
    expect(std::move(name), actual > ExtReal(0), "> 0", actual.str());
  }
  void nonpositive(std::string name, const ExtReal& actual, bool oracle = false) {
    expect(std::move(name), actual <= ExtReal(0), "<= 0", actual.str(), oracle);
  }
};

VSet poly(std::vector<Vector> vs) { return VSet::polyhedron(std::move(vs)); }

Vector v2(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }

Rational q(long a, long b = 1) { return Rational(a, b); }

std::string label_of(const std::optional<std::string>& s) { return s ? *s : "-"; }

// ---- cases ---------------------------------------------------------------------

void case_l_example(Recorder& r, const Options& opt) {
  const auto k = cone_orthant(2);
  const SetFamily a = l_example_left();
  const SetFamily b = l_example_right();
  r.truth("A1 u A2 = B1 u B2", union_equals_2d(a, b), true);
  for (const auto& bi : b.members()) {
    for (const auto& aj : a.members()) {
      RelationVerdict v = leq_l(k, aj.set, bi.set);
      const std::string name = aj.label + " <=l " + bi.label;
      r.truth(name, v.holds, false);
      r.truth(name + " witness outside " + aj.label + "+K",
              v.witness.point && set_contains(bi.set, *v.witness.point) && !minkowski_member(*v.witness.point, aj.set, k),
              true);
    }
  }
  RelationVerdict big_l = leq_L(k, a, b);
  r.truth("A <=L B", big_l.holds, false);
  RelationVerdict small_l = union_leq_l(k, a, b, opt.density);
  r.truth("A <=l B (unions)", small_l.holds, true);
  r.truth("union verdict exact", small_l.exact(), true);
  ImplicationReport imp = check_L_implies_l(k, a, b);
  r.truth("l strictly weaker than L here", imp.strict, true);
  CharacterizationReport ch = scalarization_characterize_L(k, Vector{1, 1}, a, b);
  r.positive("sup_lambda inf_gamma Z1 (e=(1,1))", ch.value);
  r.truth("scalar value agrees with L verdict", ch.consistent, true);
}

void case_u_example(Recorder& r, const Options& opt) {
  const auto k = cone_orthant(2);
  const SetFamily a = u_example_left();
  const SetFamily b = u_example_right();
  r.truth("A1 u A2 = B1 u B2", union_equals_2d(a, b), true);
  for (const auto& ai : a.members()) {
    for (const auto& bj : b.members()) {
      RelationVerdict v = leq_u(k, ai.set, bj.set);
      const std::string name = ai.label + " <=u " + bj.label;
      r.truth(name, v.holds, false);
      r.truth(name + " witness outside " + bj.label + "-K",
              v.witness.point && set_contains(ai.set, *v.witness.point) &&
                  !minkowski_member(*v.witness.point, bj.set, k.negated()),
              true);
    }
  }
  r.truth("A <=U B", leq_U(k, a, b).holds, false);
  RelationVerdict small_u = union_leq_u(k, a, b, opt.density);
  r.truth("A <=u B (unions)", small_u.holds, true);
  r.truth("union verdict exact", small_u.exact(), true);
  r.truth("u strictly weaker than U here", check_U_implies_u(k, a, b).strict, true);
  CharacterizationReport ch = scalarization_characterize_U(k, Vector{1, 1}, a, b);
  r.positive("sup_gamma inf_lambda Z2 (e=(1,1))", ch.value);
  r.truth("scalar value agrees with U verdict", ch.consistent, true);
}

void case_s_example(Recorder& r, const Options& opt) {
  const auto k = cone_orthant(2);
  const SetFamily a = l_example_left();
  const SetFamily b = l_example_right();
  RelationVerdict s = union_leq_s(k, a, b, opt.density);
  r.truth("A <=s B (unions)", s.holds, true);
  r.truth("union verdict exact", s.exact(), true);
  r.truth("A <=S B", leq_S(k, a, b).holds, false);
  r.truth("s strictly weaker than S here", check_S_implies_s(k, a, b).strict, true);
  const VSet hull = VSet::polyhedron({v2(0, 0), v2(-1, 0), v2(0, -1)});
  r.truth("union as a single polytope: A <=s B", leq_s(k, hull, hull).holds, true);
}

void case_improper(Recorder& r, const Options&) {
  const auto k = line_cone();
  r.truth("cone is pointed", is_pointed(k), false);
  std::vector<Vector> probes;
  for (int i = 0; i < 20; ++i) probes.push_back(v2(i - 10, (i % 3) - 1));
  ImpropernessReport rep = improperness_demo(k, Vector{1, 0}, probes);
  r.expect("probes", rep.samples.size() == 20, "20", std::to_string(rep.samples.size()));
  int neg = 0;
  int pos = 0;
  for (const auto& s : rep.samples) (s.value.is_neg_inf() ? neg : pos) += s.value.is_finite() ? 0 : 1;
  r.expect("every value infinite", neg + pos == 20, "20 infinite", std::to_string(neg + pos) + " infinite");
  r.truth("values match the lineality prediction", rep.consistent, true);
  r.expect("both infinities occur", neg > 0 && pos > 0, "-inf and +inf",
           std::to_string(neg) + " x -inf, " + std::to_string(pos) + " x +inf");
}

void case_attainment(Recorder& r, const Options&) {
  const auto k = ray_cone();
  const VSet a = VSet::polyhedron({v2(0, 0)}, {v2(-1, 0)});
  const VSet b = VSet::polyhedron({v2(0, 0)}, {v2(1, 0)});
  r.truth("A <=u B", leq_u(k, a, b).holds, true);
  for (int c : {1, 2, 5}) {
    ScalarizationReport z = z2_pair(k, v2(c, 0), a, b);
    r.value("Z2 with e=(" + std::to_string(c) + ",0)", z.value, ExtReal::neg_inf());
    r.truth("  improving LP ray certificate (c=" + std::to_string(c) + ")", z.inner_ray.has_value(), true);
  }
  r.value("z((-3,0)) with e=(2,0)", z_value(k, v2(2, 0), v2(-3, 0)), ExtReal(q(-3, 2)));
  r.value("z((0,1)) with e=(2,0)", z_value(k, v2(2, 0), v2(0, 1)), ExtReal::pos_inf());
}

void case_wrong_cone(Recorder& r, const Options&) {
  const auto k = cone_orthant(2);
  const VSet p = circle_polygon();
  const VSet sq = poly({v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)});
  const Vector e{1, 1};
  r.expect("polygon vertices", p.vertices().size() == 64, "64", std::to_string(p.vertices().size()));
  RelationVerdict v = leq_l(k, p, sq);
  r.truth("P <=l Q", v.holds, false);
  r.truth("witness in Q outside P+K",
          v.witness.point && set_contains(sq, *v.witness.point) && !minkowski_member(*v.witness.point, p, k), true);
  r.value("Z2 with e in K on -K", z2_pair_any(k.negated(), e, p, sq).value, ExtReal::neg_inf());
  r.value("G_(e,-K)(P,Q) = Z2 on -K of (Q,P)", z2_pair_any(k.negated(), e, sq, p).value, ExtReal::neg_inf());
  r.positive("Z1 on K (corrected characterization)", z1_pair(k, e, p, sq).value);
}

void case_level_set(Recorder& r, const Options&) {
  const auto k = cone_orthant(1);
  const VSet p = VSet::polyhedron({Vector{0}, Vector{1}});
  r.value("inf over [0,1] of z (e=1)", script_z1(k, Vector{1}, p).value, ExtReal(0));
  RelationVerdict v = leq_u(k, p, VSet::points({Vector{0}}));
  r.truth("[0,1] in 0 - K", v.holds, false);
  r.expect("violating point", v.witness.point && *v.witness.point == Vector{1}, "(1)",
           v.witness.point ? to_string(*v.witness.point) : "-");
  r.value("sup over [0,1] of z (e=1)", script_z2(k, Vector{1}, p).value, ExtReal(1));
}

void case_vacuous(Recorder& r, const Options& opt) {
  gen::Generator g(opt.seed);
  const auto k = gen::orthant(2);
  const Vector e{1, 1};
  for (int trial = 0; trial < 4; ++trial) {
    const SetFamily f = g.family(2, static_cast<std::size_t>(g.uniform(2, 3)), "p");
    // Hypothesis (i): each Q_lambda lies in p_lambda + K for a point p_lambda of P.
    std::vector<FamilyMember> qs;
    for (int lam = 0; lam < 2; ++lam) {
      const auto& member = f[static_cast<std::size_t>(g.uniform(0, static_cast<int>(f.size()) - 1))].set;
      const Vector base = member.vertices()[static_cast<std::size_t>(g.uniform(0, static_cast<int>(member.vertices().size()) - 1))];
      qs.push_back({"q" + std::to_string(lam), g.above(VSet::polyhedron({base}), k)});
    }
    const SetFamily qf(std::move(qs));
    const std::string t = " (draw " + std::to_string(trial) + ")";
    r.truth("hypothesis forces P <=l Q" + t, union_leq_l(k.cone, f, qf, opt.density).holds, true);
    r.nonpositive("hypothesis forces sup inf Z1 <= 0" + t, scalarization_characterize_L(k.cone, e, f, qf).value);

    std::vector<FamilyMember> ps;
    for (int gam = 0; gam < 2; ++gam) {
      const auto& member = f[static_cast<std::size_t>(g.uniform(0, static_cast<int>(f.size()) - 1))].set;
      const Vector top = member.vertices()[static_cast<std::size_t>(g.uniform(0, static_cast<int>(member.vertices().size()) - 1))];
      ps.push_back({"r" + std::to_string(gam), g.below(VSet::polyhedron({top}), k)});
    }
    const SetFamily pf(std::move(ps));
    r.truth("hypothesis forces P <=u Q" + t, union_leq_u(k.cone, pf, f, opt.density).holds, true);
    r.nonpositive("hypothesis forces sup inf Z2 <= 0" + t, scalarization_characterize_U(k.cone, e, pf, f).value);
  }
}

void case_desk(Recorder& r, const Options&) {
  const usop::Instance inst = desk_instance();
  const auto feas = usop::robust_feasible_set(inst);
  std::string joined;
  for (const auto& x : feas) joined += (joined.empty() ? "" : ",") + x;
  r.expect("robust feasible set", joined == "x1,x2", "x1,x2", joined);
  r.value("feasibility(x1)", usop::feasibility_vector(inst, "x1")[0], ExtReal(-1));
  r.value("feasibility(x2)", usop::feasibility_vector(inst, "x2")[0], ExtReal(0));
  r.value("feasibility(x3)", usop::feasibility_vector(inst, "x3")[0], ExtReal(1));
  for (Relation rel : {Relation::l, Relation::u, Relation::s, Relation::L, Relation::U, Relation::S}) {
    r.truth(std::string("x1 is ") + usop::to_string(rel) + "-robust",
            usop::is_robust(inst, "x1", {rel, usop::Variant::Strict}).robust, true);
  }
  usop::RobustVerdict x2 = usop::is_robust(inst, "x2", {Relation::L, usop::Variant::Strict});
  r.expect("x2 is not L-robust, dominated by x1", !x2.robust && x2.witness == "x1", "false (x1)",
           yn(x2.robust) + " (" + label_of(x2.witness) + ")");
  const auto table = usop::gap_table(inst, "x1", 2);
  r.value("gap_2(x2) at x*=x1", table.front().gap, ExtReal(1));
  r.truth("R2 meets C at x*=x1", usop::r_hat_meets_C(inst, "x1", 2).meets, false);
  usop::RHatVerdict at2 = usop::r_hat_meets_C(inst, "x2", 2);
  r.expect("R2 meets C at x*=x2", at2.meets && at2.witness == "x1", "true (x1)",
           yn(at2.meets) + " (" + label_of(at2.witness) + ")");
  for (const char* xs : {"x1", "x2"}) {
    for (Relation t : {Relation::L, Relation::U, Relation::S}) {
      usop::CharacterizationCheck c = usop::verify_characterization(inst, xs, t);
      r.truth(std::string(usop::to_string(t)) + "-characterization at " + xs, c.consistent, true);
    }
  }
  for (int which = 1; which <= 5; ++which) {
    const auto rows = usop::gap_table(inst, "x2", which);
    r.expect("gap table " + std::to_string(which) + " rows", rows.size() == 2, "2", std::to_string(rows.size()));
  }
  const auto g2 = usop::gap_table(inst, "x2", 2);
  const auto g4 = usop::gap_table(inst, "x2", 4);
  const auto g5 = usop::gap_table(inst, "x2", 5);
  bool identity = true;
  for (std::size_t i = 0; i < g5.size(); ++i) identity = identity && g5[i].gap == std::max(g2[i].gap, g4[i].gap);
  r.truth("gap_5 = max(gap_2, gap_4)", identity, true);
  usop::SufficiencyCheck s1 = usop::verify_sufficiency(inst, "x1", 1);
  r.truth("inf-gap criterion at x1", s1.premise && s1.robust.robust, true);
  usop::SufficiencyCheck s3 = usop::verify_sufficiency(inst, "x1", 3);
  r.truth("sup-gap criterion at x1", s3.premise && s3.robust.robust, true);
  usop::DualNecessaryReport dn = usop::dual_necessary(inst, "x1", Relation::L);
  r.expect("dual necessary condition (L) at x1", dn.status == usop::DualStatus::Confirmed, "confirmed",
           usop::to_string(dn.status));
  usop::DualNecessaryReport du = usop::dual_necessary(inst, "x1", Relation::U);
  r.expect("dual necessary condition (U) at x1", du.status == usop::DualStatus::Confirmed, "confirmed",
           usop::to_string(du.status));

  const usop::Instance conv = converse_instance();
  usop::SufficiencyCheck cf = usop::verify_sufficiency(conv, "xs", 1);
  r.truth("converse fixture: x* L-robust", cf.robust.robust, true);
  r.truth("converse fixture: inf-gap criterion fails", cf.premise, false);
  r.truth("converse failure recorded", cf.converse_failure, true);
}

using CaseFn = void (*)(Recorder&, const Options&);

struct CaseDef {
  const char* id;
  const char* title;
  CaseFn fn;
};

const std::vector<CaseDef>& cases() {
  static const std::vector<CaseDef> defs = {
      {"a", "l-relation of unions without an L-relation", case_l_example},
      {"b", "u-relation of unions without a U-relation", case_u_example},
      {"c", "s-relation of unions without an S-relation", case_s_example},
      {"d", "non-pointed cone: z takes only infinite values", case_improper},
      {"e", "characterization without attainment (ray cone)", case_attainment},
      {"f", "wrong cone in the G functional (circle and square)", case_wrong_cone},
      {"g", "inf-scalar level set does not give containment", case_level_set},
      {"h", "hypothesis (i) forces both sides of the original equivalences", case_vacuous},
      {"i", "desk USOP instance: robustness and gap criteria", case_desk},
  };
  return defs;
}

CaseResult run(const std::string& id, const std::string& title, const std::function<void(Recorder&)>& body) {
  CaseResult out{id, title, {}, std::nullopt, 0};
  const auto start = std::chrono::steady_clock::now();
  Recorder rec{out};
  try {
    body(rec);
  } catch (const std::exception& err) {
    out.error = err.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- oracle closure ------------------------------------------------------------

std::string bracket_str(const oracle::BisectionResult& b) {
  switch (b.kind) {
    case oracle::BisectionResult::Kind::PosInf:
      return "+inf";
    case oracle::BisectionResult::Kind::NegInf:
      return "-inf";
    case oracle::BisectionResult::Kind::Interval:
      break;
  }
  return "[" + to_string(b.lo) + ", " + to_string(b.hi) + "]";
}

void closure_z(Recorder& r, const Options&) {
  struct Probe {
    PolyhedralCone k;
    Vector e;
    Vector y;
  };
  const auto wedge = gen::wedge(2);
  std::vector<Probe> probes = {
      {cone_orthant(2), Vector{1, 1}, v2(1, 1)},
      {cone_orthant(2), Vector{1, 1}, v2(-1, 3)},
      {cone_orthant(2), Vector{1, 0}, v2(2, 5)},
      {cone_orthant(2), Vector{1, 0}, v2(2, 0)},
      {wedge.cone, wedge.directions[0], v2(q(1, 3), -2)},
      {wedge.cone, wedge.directions[2], v2(3, 1)},
      {ray_cone(), v2(2, 0), v2(-3, 0)},
      {ray_cone(), v2(2, 0), v2(0, 1)},
      {cone_orthant(1), Vector{1}, Vector{-1}},
      {cone_orthant(1), Vector{1}, Vector{1}},
  };
  for (const auto& p : probes) {
    ExtReal closed = z_value(p.k, p.e, p.y);
    auto b = oracle::z_bisection(p.k, p.e, p.y, -1, 1, 60);
    r.expect("z(" + to_string(p.y) + ") e=" + to_string(p.e), b.brackets(closed), bracket_str(b), closed.str(), true);
  }
  auto b = oracle::z_bisection(ray_cone(), v2(2, 0), v2(-3, 0), -1, 1, 60);
  r.truth("ray-cone value -3/2 bracketed", b.brackets(ExtReal(q(-3, 2))), true, true);
}

void closure_pairs(Recorder& r, const Options& opt) {
  const auto k = cone_orthant(2);
  const Vector e{1, 1};
  const SetFamily a = l_example_left();
  const SetFamily b = l_example_right();
  ScalarizationReport z = z1_pair(k, e, a[0].set, b[0].set);
  r.value("Z1(A1, B1), e=(1,1)", z.value, ExtReal(q(1, 4)));
  const int d = std::max(opt.density, 8);
  auto s = oracle::zpair_sampled(k, e, a[0].set, b[0].set, d, oracle::PairKind::Z1);
  const Rational tol = Rational(2, d);
  r.expect("sampled sup, exact inf <= exact", s.outer_sampled <= z.value, "<= 1/4", s.outer_sampled.str(), true);
  r.expect("fully sampled within 2/density", s.both_sampled.is_finite() &&
                                                  abs(s.both_sampled.value() - Rational(1, 4)) <= tol,
           "1/4 +- " + to_string(tol), s.both_sampled.str(), true);

  // Pointwise l-relation.
  const VSet origin = VSet::points({v2(0, 0)});
  const VSet two = VSet::points({v2(1, 1), v2(2, 0)});
  bool pointwise = contains(k, v2(1, 1)) && contains(k, v2(2, 0));
  r.truth("{0} <=l {(1,1),(2,0)}", leq_l(k, origin, two).holds, pointwise, true);

  // Union l-relation on a sample of B1 u B2.
  bool all_in = true;
  for (const auto& m : b.members()) {
    for (const auto& y : oracle::sample_set(m.set, opt.density).points) {
      bool in = false;
      for (const auto& am : a.members()) in = in || minkowski_member(y, am.set, k);
      all_in = all_in && in;
    }
  }
  r.truth("samples of B1 u B2 lie in (A1 u A2) + K", all_in, union_leq_l(k, a, b, opt.density).holds, true);

  // Half-space closed forms against the LP values.
  gen::Generator g(opt.seed);
  bool agree = true;
  for (int i = 0; i < 12; ++i) {
    VSet p = g.polytope(2, 4);
    Vector w{g.coord(0, 2), g.coord(0, 2)};
    if (w.is_zero()) w = Vector{1, 0};
    const auto kw = cone_halfspace(w);
    ExtReal hi = ExtReal::neg_inf();
    ExtReal lo = ExtReal::pos_inf();
    for (const auto& v : p.vertices()) {
      hi = std::max(hi, ExtReal(dot(w, v) / dot(w, w)));
      lo = std::min(lo, ExtReal(dot(w, v) / dot(w, w)));
    }
    agree = agree && script_z2(kw, w, p).value == hi && script_z1(kw, w, p).value == lo;
  }
  r.truth("half-space scalarizations equal <w,p>/<w,w> extremes", agree, true, true);
}

void closure_signs(Recorder& r, const Options& opt) {
  gen::Generator g(opt.seed + 1);
  const auto k = gen::orthant(2);
  const int d = std::max(opt.density, 8);
  int agree_exact = 0;
  int agree_oracle = 0;
  int banded = 0;
  const int n = 10;
  for (int i = 0; i < n; ++i) {
    VSet p = g.polytope(2, 3, g.point(2, -1, 1), 1);
    VSet qs = i % 2 == 0 ? g.above(p, k) : g.polytope(2, 3, g.point(2, -1, 1), 1);
    const Vector& e = k.directions[static_cast<std::size_t>(i % 2)];
    ExtReal z = z1_pair(k.cone, e, p, qs).value;
    bool holds = leq_l(k.cone, p, qs).holds;
    agree_exact += (z <= ExtReal(0)) == holds;
    auto s = oracle::zpair_sampled(k.cone, e, p, qs, d, oracle::PairKind::Z1);
    // Diameter <= 4 in the max-norm; the mesh is diameter / density.
    const Rational tol = Rational(4, d) * 2;
    if (s.both_sampled.is_finite() && abs(s.both_sampled.value()) <= tol) {
      ++banded;
      ++agree_oracle;
    } else {
      agree_oracle += (s.both_sampled <= ExtReal(0)) == holds;
    }
  }
  r.expect("Z1 sign matches l-relation", agree_exact == n, std::to_string(n), std::to_string(agree_exact), true);
  r.expect("sampled Z1 sign matches outside the tolerance band", agree_oracle == n, std::to_string(n),
           std::to_string(agree_oracle) + " (" + std::to_string(banded) + " in band)", true);
}

void closure_dual(Recorder& r, const Options&) {
  const auto k = cone_orthant(2);
  const VSet p = VSet::points({v2(q(3, 2), q(3, 2))});
  const VSet segment = poly({v2(2, 0), v2(0, 2)});
  DualSufficiencyReport rep = dual_sufficiency_check(k, p, segment, dual_generators(k), DualKind::U);
  r.truth("generator probes satisfy the premise", rep.probe_premise, true);
  r.truth("premise over all of K*", rep.exact_premise, false);
  r.truth("P <=u Q", rep.verdict.holds, false);
  bool oracle_violation = false;
  if (rep.breaking_w) {
    const Vector& w = *rep.breaking_w;
    oracle_violation = dot(w, v2(q(3, 2), q(3, 2))) > std::max(dot(w, v2(2, 0)), dot(w, v2(0, 2)));
  }
  r.truth("breaking w separates P from Q - K", oracle_violation, true, true);
}

void closure_usop(Recorder& r, const Options&) {
  const usop::Instance inst = desk_instance();
  const auto k1 = cone_orthant(1);
  for (const char* x : {"x1", "x2", "x3"}) {
    ExtReal f = usop::feasibility_vector(inst, x)[0];
    const auto& fset = inst.constraints()[0].F[inst.index_of(x)][0];
    auto b = oracle::z_bisection(k1, Vector{1}, fset.vertices().front(), -1, 1, 40);
    r.expect(std::string("feasibility(") + x + ") bracketed", b.brackets(f), bracket_str(b), f.str(), true);
  }
  const auto table = usop::gap_table(inst, "x1", 2);
  auto b = oracle::z_bisection(cone_orthant(2), Vector{1, 1}, v2(1, 1), -1, 1, 40);
  r.expect("gap_2(x2) bracketed", b.brackets(table.front().gap), bracket_str(b), table.front().gap.str(), true);
  // Singleton objectives: relations reduce to cone membership of differences.
  const auto& h = inst.objective().H;
  const Vector& h1 = h[0][0].vertices().front();
  const Vector& h2 = h[1][0].vertices().front();
  const bool x2_dominates_x1 = contains(cone_orthant(2), h1 - h2);
  r.truth("x1 robust by pointwise comparison", !x2_dominates_x1,
          usop::is_robust(inst, "x1", {Relation::L, usop::Variant::Strict}).robust, true);
}

void closure_planted(Recorder& r, const Options& opt) {
  gen::Generator g(opt.seed + 2);
  const auto k = gen::orthant(2);
  const Vector e{1, 1};
  bool values = true;
  bool oracle_ok = true;
  for (int t = 0; t < 4; ++t) {
    const SetFamily f = g.family(2, 2, "p");
    std::vector<FamilyMember> qs;
    for (int lam = 0; lam < 2; ++lam) qs.push_back({"q" + std::to_string(lam), g.above(f[static_cast<std::size_t>(lam)].set, k)});
    const SetFamily qf(std::move(qs));
    values = values && scalarization_characterize_L(k.cone, e, f, qf).value <= ExtReal(0);
    for (const auto& qm : qf.members()) {
      ExtReal best = ExtReal::pos_inf();
      for (const auto& pm : f.members()) {
        best = std::min(best, oracle::zpair_sampled(k.cone, e, pm.set, qm.set, 4, oracle::PairKind::Z1).outer_sampled);
      }
      oracle_ok = oracle_ok && best <= ExtReal(0);
    }
  }
  r.truth("planted L-families: sup inf Z1 <= 0", values, true);
  r.truth("planted L-families: sampled lower bound <= 0", oracle_ok, true, true);

  // Implications and scalar monotonicity on planted assignments.
  bool implied = true;
  bool monotone = true;
  for (int t = 0; t < 6; ++t) {
    const SetFamily f = g.family(2, 2, "p");
    std::vector<FamilyMember> above_f;
    std::vector<FamilyMember> below_f;
    for (int i = 0; i < 2; ++i) {
      const auto& src = f[static_cast<std::size_t>(g.uniform(0, 1))].set;
      above_f.push_back({"q" + std::to_string(i), g.above(src, k)});
      below_f.push_back({"r" + std::to_string(i), g.below(src, k)});
    }
    const SetFamily qa(std::move(above_f));
    const SetFamily rb(std::move(below_f));
    ImplicationReport il = check_L_implies_l(k.cone, f, qa);
    ImplicationReport iu = check_U_implies_u(k.cone, rb, f);
    implied = implied && il.family.holds && il.unions.holds && iu.family.holds && iu.unions.holds;
    MonotonicityReport ml = scalar_monotonicity_L(k.cone, e, f, qa);
    MonotonicityReport mu = scalar_monotonicity_U(k.cone, e, rb, f);
    monotone = monotone && ml.asserted && ml.left <= ml.right && mu.asserted && mu.left <= mu.right;
  }
  r.truth("planted L and U families: union relations follow", implied, true);
  r.truth("planted families: inf/sup scalar monotonicity", monotone, true);
}

void closure_geometry(Recorder& r, const Options&) {
  const auto w = cone_from_generators({v2(1, 1), v2(1, -1)});
  bool agree = true;
  for (int i = -12; i <= 12; ++i) {
    for (int j = -12; j <= 12; ++j) {
      const Vector y = v2(q(i, 4), q(j, 4));
      const bool direct = y[0] + y[1] >= 0 && y[0] - y[1] >= 0;
      agree = agree && contains(w, y) == direct;
    }
  }
  r.truth("cone((1,1),(1,-1)) membership on a grid in [-3,3]^2", agree, true, true);

  const auto ray = ray_cone();
  bool dual_ok = true;
  for (const auto& d : dual_generators(ray)) dual_ok = dual_ok && dot(d, v2(1, 0)) >= 0;
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      const Vector d = v2(i, j);
      dual_ok = dual_ok && in_dual_cone(ray, d) == (i >= 0);
    }
  }
  r.truth("dual of the ray cone is {w : w1 >= 0}", dual_ok, true, true);

  const SetFamily left = l_example_left();
  const VSet& a1 = left[0].set;
  const auto& vs = a1.vertices();
  Rational twice = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vector& p = vs[i];
    const Vector& n = vs[(i + 1) % vs.size()];
    twice += p[0] * n[1] - n[0] * p[1];
  }
  const Rational shoelace = abs(twice) / 2;
  r.expect("area(A1)", polygon_area_2d(a1) == shoelace, to_string(shoelace), to_string(polygon_area_2d(a1)), true);

  const VSet axis = VSet::polyhedron({v2(0, 0)}, {v2(1, 0), v2(-1, 0)});
  ProperReport pr = is_K_proper(axis, cone_orthant(2));
  r.truth("x-axis line is orthant-proper", pr.proper, true);
  r.truth("  certified outside point", pr.outside_point && !minkowski_member(*pr.outside_point, axis, cone_orthant(2)),
          true, true);

  const VSet origin = VSet::points({v2(0, 0)});
  const Vector e{1, 1};
  const Vector y = v2(q(-1, 64), q(-1, 64));
  std::vector<Rational> alphas;
  for (int i = 0; i <= 10; ++i) alphas.push_back(Rational(1, 1 << i));
  IntersectionLemmaReport il = check_intersection_lemma(origin, cone_orthant(2), e, alphas, {v2(0, 0), v2(1, 2), y});
  r.truth("P + K as intersection of shifts", il.holds, true);
  const auto& out = il.probes.back();
  r.truth("point below P + K excluded at small alpha",
          out.excluding_alpha && !minkowski_member(y + e * *out.excluding_alpha, origin, cone_orthant(2)), true, true);
}

void closure_functionals(Recorder& r, const Options& opt) {
  const auto k = cone_orthant(2);
  const Vector e{1, 1};
  auto check = [&](const std::string& name, const ExtReal& v, const Vector& y) {
    auto b = oracle::z_bisection(k, e, y, -1, 1, 60);
    r.expect(name, b.brackets(v), bracket_str(b), v.str(), true);
  };
  check("z((2,3)), e=(1,1)", z_value(k, e, v2(2, 3)), v2(2, 3));
  const VSet origin = VSet::points({v2(0, 0)});
  const VSet one = VSet::points({v2(1, 1)});
  check("inner inf for P={0}, q=(1,1)", inner_inf(k, e, origin, v2(1, 1)).value, v2(-1, -1));
  check("Z1({0}, {(1,1)})", z1_pair(k, e, origin, one).value, v2(-1, -1));
  check("Z2({(1,1)}, {0})", z2_pair(k, e, one, origin).value, v2(1, 1));

  const VSet unit = VSet::polyhedron({Vector{0}, Vector{1}});
  ExtReal hi = ExtReal::neg_inf();
  for (const auto& y : oracle::sample_set(unit, opt.density).points) hi = std::max(hi, z_value(cone_orthant(1), Vector{1}, y));
  r.value("sup over [0,1] of z against samples", script_z2(cone_orthant(1), Vector{1}, unit).value, hi, true);

  // G with e = (-1,-1): inf{t : q in t e + P + K} = z^{(1,1),K}(-q) for P = {0}.
  const VSet right = VSet::points({v2(1, 0)});
  ScalarizationReport gr = g_e(v2(-1, -1), k, origin, right);
  check("G_e({0}, {(1,0)})", gr.value, v2(-1, 0));
  r.truth("G_e <= 1 and (1,0) in 1 e + P + K", gr.value <= ExtReal(1) && minkowski_member(v2(2, 1), origin, k), true,
          true);

  // Sign agreement of the sampling oracle on the triangles at density 16.
  const SetFamily a = l_example_left();
  const SetFamily b = l_example_right();
  auto s = oracle::zpair_sampled(k, e, a[0].set, b[0].set, 16, oracle::PairKind::Z1);
  r.truth("sampled Z1(A1, B1) positive at density 16", s.both_sampled > ExtReal(0),
          z1_pair(k, e, a[0].set, b[0].set).value > ExtReal(0), true);
}

void closure_dual_random(Recorder& r, const Options& opt) {
  gen::Generator g(opt.seed + 3);
  const auto k = cone_orthant(2);
  const auto probes = dual_generators(k);
  const int n = 20;
  int agree = 0;
  int oracle_ok = 0;
  for (int i = 0; i < n; ++i) {
    const VSet p = g.polytope(2, 3, g.point(2, -1, 1), 1);
    const VSet qs = g.polytope(2, 3, g.point(2, -1, 1), 1);
    DualSufficiencyReport rep = dual_sufficiency_check(k, p, qs, probes, DualKind::U);
    agree += rep.exact_premise == rep.verdict.holds;
    bool all_in = true;
    for (const auto& v : p.vertices()) all_in = all_in && minkowski_member(v, qs, k.negated());
    oracle_ok += all_in == rep.verdict.holds;
  }
  r.expect("support inequality on all of K* iff P <=u Q", agree == n, std::to_string(n), std::to_string(agree));
  r.expect("vertexwise containment oracle agrees", oracle_ok == n, std::to_string(n), std::to_string(oracle_ok), true);
}

usop::Instance l_not_L_instance() {
  const SetFamily a = l_example_left();
  const SetFamily b = l_example_right();
  usop::SetTable ht = {{b[0].set, b[1].set}, {a[0].set, a[1].set}};
  usop::SetTable ft = {{VSet::points({Vector{-1}}), VSet::points({Vector{-1}})},
                       {VSet::points({Vector{-1}}), VSet::points({Vector{-1}})}};
  return usop::Instance({"xs", "x"}, {"u1", "u2"}, {cone_orthant(2), Vector{1, 1}, std::move(ht)},
                        {{cone_orthant(1), Vector{1}, std::move(ft)}});
}

void closure_usop_more(Recorder& r, const Options&) {
  const usop::Instance inst = l_not_L_instance();
  const bool big = usop::is_robust(inst, "xs", {Relation::L, usop::Variant::Strict}).robust;
  const bool small = usop::is_robust(inst, "xs", {Relation::l, usop::Variant::Strict}).robust;
  r.truth("triangle instance: x* L-robust", big, true);
  r.truth("triangle instance: x* l-robust", small, false);
  const SetFamily a = l_example_left();
  const SetFamily b = l_example_right();
  bool member_pair = false;
  for (const auto& am : a.members()) {
    for (const auto& bm : b.members()) member_pair = member_pair || leq_l(cone_orthant(2), am.set, bm.set).holds;
  }
  r.truth("direct check: no member pair dominates", member_pair, false, true);
  r.truth("characterization consistent on the triangle instance",
          usop::verify_characterization(inst, "xs", Relation::L).consistent, true);

  const usop::Instance desk = desk_instance();
  usop::DualNecessaryReport dn = usop::dual_necessary(desk, "x1", Relation::L);
  r.expect("desk: some probe w certifies x1", dn.good_w.has_value(), "w found",
           dn.good_w ? to_string(*dn.good_w) : "none");
  usop::SufficiencyCheck s = usop::verify_sufficiency(desk, "x1", 1);
  r.truth("desk: inf-gap premise at x1", s.premise && s.robust.robust, true);

  const usop::Instance conv = converse_instance();
  const auto& h = conv.objective().H;
  const bool dominated = contains(cone_orthant(2), h[0][0].vertices().front() - h[1][0].vertices().front());
  r.truth("converse fixture: x* undominated by pointwise comparison", !dominated,
          usop::verify_sufficiency(conv, "xs", 1).converse_failure, true);
}

}  // namespace

bool CaseResult::pass() const {
  if (error) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

bool SuiteReport::pass() const {
  for (const auto& c : cases) {
    if (!c.pass()) return false;
  }
  return true;
}

SetFamily l_example_left() {
  return SetFamily({{"A1", poly({v2(0, 0), v2(-1, 0), v2(q(-1, 2), q(-1, 2))})},
                    {"A2", poly({v2(0, 0), v2(q(-1, 2), q(-1, 2)), v2(0, -1)})}});
}

SetFamily l_example_right() {
  return SetFamily({{"B1", poly({v2(0, 0), v2(q(-3, 4), 0), v2(0, q(-3, 4))})},
                    {"B2", poly({v2(-1, 0), v2(q(-3, 4), 0), v2(0, q(-3, 4)), v2(0, -1)})}});
}

SetFamily u_example_left() {
  return SetFamily({{"A1", poly({v2(0, 0), v2(q(3, 4), 0), v2(0, q(3, 4))})},
                    {"A2", poly({v2(1, 0), v2(q(3, 4), 0), v2(0, q(3, 4)), v2(0, 1)})}});
}

SetFamily u_example_right() {
  return SetFamily({{"B1", poly({v2(0, 0), v2(1, 0), v2(q(1, 2), q(1, 2))})},
                    {"B2", poly({v2(0, 0), v2(q(1, 2), q(1, 2)), v2(0, 1)})}});
}

PolyhedralCone ray_cone() { return PolyhedralCone(2, {v2(1, 0), v2(0, 1), v2(0, -1)}, "ray"); }

PolyhedralCone line_cone() { return PolyhedralCone(2, {v2(0, 1), v2(0, -1)}, "line"); }

VSet circle_polygon() {
  std::vector<Vector> pts;
  const Vector center{4, 4};
  for (int j = -16; j <= 16; ++j) {
    const Rational t(j, 16);
    const Rational x = (1 - t * t) / (1 + t * t);
    const Rational y = 2 * t / (1 + t * t);
    pts.push_back(center + v2(x, y));
    if (x != 0) pts.push_back(center + v2(-x, y));
  }
  return VSet::polyhedron(std::move(pts));
}

usop::Instance desk_instance() {
  const std::vector<std::string> xs = {"x1", "x2", "x3"};
  const std::vector<std::string> us = {"u1", "u2"};
  const std::vector<Vector> h = {v2(0, 0), v2(1, 1), v2(-1, -1)};
  const std::vector<Rational> f = {-1, 0, 1};
  usop::SetTable ht;
  usop::SetTable ft;
  for (std::size_t x = 0; x < xs.size(); ++x) {
    ht.push_back({VSet::points({h[x]}), VSet::points({h[x]})});
    ft.push_back({VSet::points({Vector{f[x]}}), VSet::points({Vector{f[x]}})});
  }
  return usop::Instance(xs, us, {cone_orthant(2), Vector{1, 1}, std::move(ht)},
                        {{cone_orthant(1), Vector{1}, std::move(ft)}});
}

usop::Instance converse_instance() {
  usop::SetTable ht = {{VSet::points({v2(2, 0)})}, {VSet::points({v2(1, 1)})}};
  usop::SetTable ft = {{VSet::points({Vector{-1}})}, {VSet::points({Vector{-1}})}};
  return usop::Instance({"xs", "x"}, {"u"}, {cone_orthant(2), Vector{1, 1}, std::move(ht)},
                        {{cone_orthant(1), Vector{1}, std::move(ft)}});
}

CaseResult run_case(const std::string& id, const Options& opt) {
  for (const auto& c : cases()) {
    if (id == c.id) return run(c.id, c.title, [&](Recorder& r) { c.fn(r, opt); });
  }
  throw PreconditionError("UnknownCase", "no suite case '" + id + "'");
}

SuiteReport run_all(const Options& opt) {
  SuiteReport out{"paper", {}};
  for (const auto& c : cases()) out.cases.push_back(run_case(c.id, opt));
  return out;
}

SuiteReport derived_suite(const Options& opt) {
  SuiteReport out{"derived", {}};
  const std::vector<std::pair<const char*, CaseFn>> defs = {
      {"z values against bisection", closure_z},     {"pair values and relations", closure_pairs},
      {"signs on random pairs", closure_signs},       {"dual-cone sufficiency", closure_dual},
      {"desk instance", closure_usop},                {"planted families", closure_planted},
      {"cones and planar geometry", closure_geometry}, {"functional spot values", closure_functionals},
      {"dual-cone sufficiency on random pairs", closure_dual_random},
      {"robustness fixtures", closure_usop_more},
  };
  int n = 0;
  for (const auto& [title, fn] : defs) {
    out.cases.push_back(run("d" + std::to_string(++n), title, [&](Recorder& r) { fn(r, opt); }));
  }
  return out;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& ch : c.checks) {
      checks.push_back({{"name", ch.name},
                        {"expected", ch.expected},
                        {"actual", ch.actual},
                        {"pass", ch.pass},
                        {"oracle", ch.oracle}});
    }
    nlohmann::json jc{{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}};
    if (c.error) jc["error"] = *c.error;
    cs.push_back(jc);
  }
  return {{"suite", r.suite}, {"pass", r.pass()}, {"cases", cs}};
}

std::string to_table(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    os << (c.pass() ? "PASS" : "FAIL") << "  (" << c.id << ") " << c.title << "  [" << std::fixed
       << std::setprecision(3) << c.seconds << " s]\n";
    for (const auto& ch : c.checks) {
      os << "    " << (ch.pass ? "ok  " : "BAD ") << ch.name << ": " << ch.actual;
      if (!ch.pass) os << " (expected " << ch.expected << ")";
      if (ch.oracle) os << " [oracle]";
      os << "\n";
    }
    if (c.error) os << "    error: " << *c.error << "\n";
  }
  os << r.suite << " suite: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace setopt::papersuite
