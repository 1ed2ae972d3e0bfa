// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "setopt/generate.hpp"
#include "setopt/papersuite.hpp"
#include "setopt/relations.hpp"
#include "setopt/scalarize.hpp"
#include "setopt/usop.hpp"

using namespace setopt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }

// ---- 1, 2 -----------------------------------------------------------------------

Outcome lower_example() {
  const auto k = cone_orthant(2);
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  Outcome o;
  o.pass = union_equals_2d(a, b);
  int refuted = 0;
  for (const auto& bi : b.members()) {
    for (const auto& aj : a.members()) {
      RelationVerdict r = leq_l(k, aj.set, bi.set);
      refuted += !r.holds && r.witness.point && set_contains(bi.set, *r.witness.point) &&
                 !minkowski_member(*r.witness.point, aj.set, k);
    }
  }
  const bool big = leq_L(k, a, b).holds;
  RelationVerdict small = union_leq_l(k, a, b);
  o.pass = o.pass && refuted == 4 && !big && small.holds && small.exact();
  o.detail = "unions equal, " + std::to_string(refuted) + "/4 member l-relations refuted with witnesses, L=" +
             (big ? "true" : "false") + ", union l=" + (small.holds ? "true" : "false");
  return o;
}

Outcome upper_example() {
  const auto k = cone_orthant(2);
  const auto a = papersuite::u_example_left();
  const auto b = papersuite::u_example_right();
  const SetFamily tri({{"T", VSet::polyhedron({v(0, 0), v(1, 0), v(0, 1)})}});
  Outcome o;
  o.pass = union_equals_2d(a, b) && union_equals_2d(a, tri);
  int refuted = 0;
  for (const auto& ai : a.members()) {
    for (const auto& bj : b.members()) {
      RelationVerdict r = leq_u(k, ai.set, bj.set);
      refuted += !r.holds && r.witness.point && set_contains(ai.set, *r.witness.point) &&
                 !minkowski_member(*r.witness.point, bj.set, k.negated());
    }
  }
  const bool big = leq_U(k, a, b).holds;
  RelationVerdict small = union_leq_u(k, a, b);
  o.pass = o.pass && refuted == 4 && !big && small.holds && small.exact();
  o.detail = "unions equal the unit triangle, " + std::to_string(refuted) + "/4 member u-relations refuted, U=" +
             (big ? "true" : "false") + ", union u=" + (small.holds ? "true" : "false");
  return o;
}

// ---- 3, 4, 5 --------------------------------------------------------------------

Outcome ray_cone_values() {
  const auto k = papersuite::ray_cone();
  const VSet a = VSet::polyhedron({v(0, 0)}, {v(-1, 0)});
  const VSet b = VSet::polyhedron({v(0, 0)}, {v(1, 0)});
  Outcome o;
  for (int c : {1, 2, 5}) {
    ScalarizationReport r = z2_pair(k, v(c, 0), a, b);
    const bool ok = r.value.is_neg_inf() && r.inner_ray.has_value();
    o.pass = o.pass && ok;
    o.detail += "c=" + std::to_string(c) + ": " + r.value.str() + (r.inner_ray ? " (ray)" : " (no ray)") + "; ";
  }
  return o;
}

Outcome improperness() {
  const auto k = papersuite::line_cone();
  std::vector<Vector> probes;
  for (int i = 0; i < 20; ++i) probes.push_back(v(Rational(i - 10, 3), (i % 4) - 1));
  ImpropernessReport rep = improperness_demo(k, v(1, 0), probes);
  Outcome o;
  int matched = 0;
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    // Lineality line: y in K = {y2 = 0} gives -inf, anything else +inf.
    const bool on_line = probes[i][1] == 0;
    const ExtReal expect = on_line ? ExtReal::neg_inf() : ExtReal::pos_inf();
    matched += rep.samples[i].value == expect;
  }
  o.pass = rep.samples.size() == 20 && matched == 20 && rep.consistent;
  o.detail = std::to_string(matched) + "/20 probes match the case split";
  return o;
}

Outcome level_set_failure() {
  const auto k = cone_orthant(1);
  const VSet p = VSet::polyhedron({Vector{0}, Vector{1}});
  const ExtReal z = script_z1(k, Vector{1}, p).value;
  const bool inside = leq_u(k, p, VSet::points({Vector{0}})).holds;
  return {z == ExtReal(0) && !inside, "inf z = " + z.str() + ", [0,1] in -K: " + (inside ? "true" : "false")};
}

// ---- 6 --------------------------------------------------------------------------

Outcome theorem_equivalence() {
  gen::Generator g(2024);
  const std::vector<gen::ConeSample> cones = {gen::orthant(2), gen::wedge(2), gen::orthant(3), gen::wedge(3)};
  int violations = 0;
  int l_true = 0;
  int u_true = 0;
  int checks = 0;
  for (int i = 0; i < 300; ++i) {
    const auto& k = cones[static_cast<std::size_t>(i % 4)];
    const std::size_t dim = k.cone.dim();
    VSet p = g.polytope(dim, static_cast<std::size_t>(g.uniform(1, 4)));
    VSet q = g.polytope(dim, static_cast<std::size_t>(g.uniform(1, 4)));
    const int mode = (i / 4) % 4;
    if (mode == 0) q = g.above(p, k);
    if (mode == 1) p = g.below(q, k);
    if (mode == 2 && g.coin()) p = VSet::polyhedron(p.vertices(), {k.generators[0]});
    const bool l = leq_l(k.cone, p, q).holds;
    const bool u = leq_u(k.cone, p, q).holds;
    l_true += l;
    u_true += u;
    for (const auto& e : k.directions) {
      violations += (z1_pair(k.cone, e, p, q).value <= ExtReal(0)) != l;
      violations += (z2_pair(k.cone, e, p, q).value <= ExtReal(0)) != u;
      checks += 2;
    }
  }
  return {violations == 0, std::to_string(checks) + " sign tests over 300 pairs (" + std::to_string(l_true) +
                               " l-true, " + std::to_string(u_true) + " u-true), " + std::to_string(violations) +
                               " violations"};
}

// ---- 7 --------------------------------------------------------------------------

Outcome union_implications() {
  gen::Generator g(77);
  const auto k = gen::orthant(2);
  int violations = 0;
  int inexact = 0;
  int strict = 0;
  for (int i = 0; i < 100; ++i) {
    const SetFamily f = g.family(2, static_cast<std::size_t>(g.uniform(1, 3)), "f");
    auto pick = [&] { return f[static_cast<std::size_t>(g.uniform(0, static_cast<int>(f.size()) - 1))].set; };
    std::vector<FamilyMember> up;
    std::vector<FamilyMember> down;
    std::vector<FamilyMember> both;
    for (int j = 0; j < 2; ++j) {
      up.push_back({"g" + std::to_string(j), g.above(pick(), k)});
      down.push_back({"h" + std::to_string(j), g.below(pick(), k)});
    }
    for (std::size_t j = 0; j < f.size(); ++j) both.push_back({"s" + std::to_string(j), g.above(f[j].set, k)});
    const SetFamily gu(std::move(up));
    const SetFamily hd(std::move(down));
    const SetFamily sb(std::move(both));
    try {
      for (const ImplicationReport& r :
           {check_L_implies_l(k.cone, f, gu), check_U_implies_u(k.cone, hd, f), check_S_implies_s(k.cone, f, sb)}) {
        violations += !r.family.holds || !r.unions.holds;
        inexact += !r.unions.exact();
        strict += r.strict;
      }
    } catch (const InternalError&) {
      ++violations;
    }
  }
  return {violations == 0 && inexact == 0,
          "300 planted family pairs, " + std::to_string(violations) + " violations, " + std::to_string(inexact) +
              " non-exact union verdicts"};
}

// ---- 8 --------------------------------------------------------------------------

Outcome usop_characterization() {
  gen::Generator g(31337);
  int violations = 0;
  int checks = 0;
  int cells = 0;
  for (int i = 0; i < 200; ++i) {
    const usop::Instance inst = g.usop_instance(6, 4);
    std::vector<std::string> feas;
    try {
      feas = usop::robust_feasible_set(inst);
    } catch (const InternalError&) {
      ++violations;
      continue;
    }
    // Two further choices of e' per constraint must give the same feasible set.
    for (const std::vector<Vector>& alt : {std::vector<Vector>{Vector{3}, v(1, 2)}, {Vector{Rational(1, 2)}, v(3, 1)}}) {
      std::vector<std::string> again;
      for (const auto& x : inst.decisions()) {
        bool ok = true;
        for (const auto& c : usop::feasibility_vector(inst, x, alt)) ok = ok && c <= ExtReal(0);
        if (ok) again.push_back(x);
      }
      violations += again != feas;
    }
    // Level-set bridge on every cell: sup z <= 0 iff F(x,u) in -K'.
    for (const auto& block : inst.constraints()) {
      for (const auto& row : block.F) {
        for (const auto& cell : row) {
          const bool by_value = script_z2(block.cone, block.e, cell).value <= ExtReal(0);
          const bool by_set = leq_u(block.cone, cell, VSet::points({Vector(block.e.dim())})).holds;
          violations += by_value != by_set;
          ++cells;
        }
      }
    }
    for (const auto& x : feas) {
      for (usop::Relation t : {usop::Relation::L, usop::Relation::U, usop::Relation::S}) {
        try {
          violations += !usop::verify_characterization(inst, x, t).consistent;
        } catch (const InternalError&) {
          ++violations;
        }
        ++checks;
      }
    }
  }
  return {violations == 0, std::to_string(checks) + " characterization checks, " + std::to_string(cells) +
                               " constraint cells, " + std::to_string(violations) + " violations"};
}

// ---- 9 --------------------------------------------------------------------------

Outcome oracle_closure() {
  const auto rep = papersuite::derived_suite();
  std::size_t n = 0;
  std::string failed;
  for (const auto& c : rep.cases) {
    n += c.checks.size();
    if (!c.pass()) failed += " " + c.id;
  }
  return {rep.pass(), std::to_string(n) + " derived checks" + (failed.empty() ? "" : ", failing:" + failed)};
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "lower example: l without L", 1, lower_example},
      {2, "upper example: u without U", 1, upper_example},
      {3, "ray cone: Z2 = -inf with ray certificates", 1, ray_cone_values},
      {4, "non-pointed cone: infinite values", 1, improperness},
      {5, "inf-scalar level set without containment", 1, level_set_failure},
      {6, "l/u iff Z1/Z2 <= 0 on random pairs", 60, theorem_equivalence},
      {7, "L=>l, U=>u, S=>s on planted families", 60, union_implications},
      {8, "robustness characterizations on random instances", 120, usop_characterization},
      {9, "oracle closure of derived values", 60, oracle_closure},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& err) {
      o = {false, std::string("exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s -- %s [%.2f s / %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs, c.budget_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
