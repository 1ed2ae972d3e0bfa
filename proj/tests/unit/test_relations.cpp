#include <gtest/gtest.h>

#include "setopt/generate.hpp"
#include "setopt/papersuite.hpp"
#include "setopt/relations.hpp"
#include "setopt/scalarize.hpp"

using namespace setopt;

namespace {

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }
const PolyhedralCone K2 = cone_orthant(2);

}  // namespace

TEST(SetRelations, Lower) {
  const VSet t = VSet::polyhedron({v(0, 0), v(-1, 0), v(0, -1)});
  EXPECT_TRUE(leq_l(K2, t, t).holds);
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  auto r = leq_l(K2, a[0].set, b[1].set);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.point.has_value());
  EXPECT_FALSE(minkowski_member(*r.witness.point, a[0].set, K2));
  EXPECT_TRUE(leq_l(K2, VSet::points({v(0, 0)}), VSet::points({v(1, 1), v(2, 0)})).holds);
}

TEST(SetRelations, Upper) {
  const VSet t = VSet::polyhedron({v(0, 0), v(1, 0), v(0, 1)});
  EXPECT_TRUE(leq_u(K2, t, t).holds);
  const auto a = papersuite::u_example_left();
  const auto b = papersuite::u_example_right();
  EXPECT_FALSE(leq_u(K2, a[0].set, b[0].set).holds);
  EXPECT_TRUE(leq_u(K2, VSet::points({v(1, 1)}), VSet::points({v(1, 1)})).holds);
}

TEST(SetRelations, Set) {
  const VSet t = VSet::polyhedron({v(0, 0), v(1, 0), v(0, 1)});
  EXPECT_TRUE(leq_s(K2, t, t).holds);
  EXPECT_FALSE(leq_s(K2, t.translated(v(3, 3)), t).holds);
}

TEST(SetRelations, PreorderLaws) {
  gen::Generator g(21);
  const auto k = gen::orthant(2);
  for (int i = 0; i < 20; ++i) {
    const VSet p = g.polytope(2, 3);
    const VSet q = g.above(p, k);
    const VSet r = g.above(q, k);
    EXPECT_TRUE(leq_l(K2, p, p).holds);
    EXPECT_TRUE(leq_l(K2, p, q).holds);
    EXPECT_TRUE(leq_l(K2, q, r).holds);
    EXPECT_TRUE(leq_l(K2, p, r).holds);
    const VSet qb = g.below(p, k);
    EXPECT_TRUE(leq_u(K2, qb, p).holds);
    EXPECT_TRUE(leq_u(K2, p, p).holds);
  }
}

TEST(SetRelations, UnsupportedCombination) {
  EXPECT_THROW(leq_l(K2, VSet::points({v(0, 0), v(1, 1)}), VSet::polyhedron({v(0, 0), v(1, 0), v(0, 1)})),
               PreconditionError);
}

TEST(FamilyRelations, PaperExamples) {
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  EXPECT_FALSE(leq_L(K2, a, b).holds);
  EXPECT_TRUE(union_leq_l(K2, a, b).holds);
  EXPECT_TRUE(union_leq_l(K2, a, b).exact());
  EXPECT_FALSE(leq_U(K2, papersuite::u_example_left(), papersuite::u_example_right()).holds);
  EXPECT_TRUE(union_leq_u(K2, papersuite::u_example_left(), papersuite::u_example_right()).holds);
  EXPECT_FALSE(leq_S(K2, a, b).holds);
}

TEST(FamilyRelations, SingletonsReduce) {
  gen::Generator g(4);
  for (int i = 0; i < 10; ++i) {
    const VSet p = g.polytope(2, 3);
    const VSet q = g.polytope(2, 3);
    const auto fp = SetFamily::singleton(p);
    const auto fq = SetFamily::singleton(q);
    EXPECT_EQ(leq_L(K2, fp, fq).holds, leq_l(K2, p, q).holds);
    EXPECT_EQ(leq_U(K2, fp, fq).holds, leq_u(K2, p, q).holds);
    auto rep = check_L_implies_l(K2, fp, fq);
    EXPECT_EQ(rep.family.holds, rep.unions.holds);
  }
}

TEST(FamilyRelations, ShiftedUnionFails) {
  const auto a = papersuite::l_example_left();
  std::vector<FamilyMember> shifted;
  const auto b = papersuite::l_example_right();
  for (const auto& m : b.members()) shifted.push_back({m.label, m.set.translated(v(-1, -1))});
  auto r = union_leq_l(K2, a, SetFamily(shifted));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.point.has_value());
}

TEST(FamilyRelations, Implications) {
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  EXPECT_TRUE(check_L_implies_l(K2, a, b).strict);
  EXPECT_TRUE(check_U_implies_u(K2, papersuite::u_example_left(), papersuite::u_example_right()).strict);
  EXPECT_TRUE(check_S_implies_s(K2, a, b).strict);
}

TEST(FamilyRelations, Characterization) {
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  auto ch = scalarization_characterize_L(K2, v(1, 1), a, b);
  EXPECT_GT(ch.value, ExtReal(0));
  EXPECT_TRUE(ch.consistent);
  auto s = scalarization_characterize_S(K2, v(1, 1), v(1, 2), a, b);
  EXPECT_TRUE(s.consistent);
  EXPECT_FALSE(s.verdict.holds);
}

TEST(FamilyRelations, Monotonicity) {
  const SetFamily f({{"p", VSet::points({v(0, 0)})}});
  const SetFamily g({{"q", VSet::polyhedron({v(1, 1), v(2, 1)})}});
  auto rep = scalar_monotonicity_L(K2, v(1, 1), f, g);
  EXPECT_TRUE(rep.asserted);
  EXPECT_LE(rep.left, rep.right);
  auto no = scalar_monotonicity_L(K2, v(1, 1), g, f);
  EXPECT_FALSE(no.asserted);
}

TEST(DualSufficiency, ExactPremiseDecides) {
  const VSet p = VSet::points({v(Rational(3, 2), Rational(3, 2))});
  const VSet q = VSet::polyhedron({v(2, 0), v(0, 2)});
  auto rep = dual_sufficiency_check(K2, p, q, dual_generators(K2), DualKind::U);
  EXPECT_TRUE(rep.probe_premise);
  EXPECT_FALSE(rep.exact_premise);
  EXPECT_FALSE(rep.verdict.holds);
  ASSERT_TRUE(rep.breaking_w.has_value());
  EXPECT_TRUE(in_dual_cone(K2, *rep.breaking_w));
  const VSet below = VSet::points({v(1, 1)});
  EXPECT_TRUE(dual_sufficiency_check(K2, below, q, dual_generators(K2), DualKind::U).verdict.holds);
}

TEST(DualSufficiency, HalfspaceClosedForm) {
  const VSet p = VSet::polyhedron({v(0, 0), v(2, 1), v(1, 3)});
  const Vector w = v(1, 2);
  EXPECT_EQ(script_z2(cone_halfspace(w), w, p).value, ExtReal(Rational(7, 5)));
  EXPECT_EQ(script_z1(cone_halfspace(w), w, p).value, ExtReal(0));
}

TEST(DualSufficiency, ProbeOutsideDual) {
  const VSet p = VSet::points({v(0, 0)});
  EXPECT_THROW(dual_sufficiency_check(K2, p, p, {v(-1, 0)}, DualKind::U), PreconditionError);
}
