#include <gtest/gtest.h>

#include "setopt/papersuite.hpp"
#include "setopt/scalarize.hpp"

using namespace setopt;

namespace {

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }
const PolyhedralCone K2 = cone_orthant(2);

}  // namespace

TEST(Gerstewitz, ClosedForm) {
  const auto ray = papersuite::ray_cone();
  EXPECT_EQ(z_value(ray, v(2, 0), v(-3, 0)), ExtReal(Rational(-3, 2)));
  EXPECT_EQ(z_value(K2, v(1, 1), v(0, 0)), ExtReal(0));
  EXPECT_EQ(z_value(K2, v(1, 1), v(2, 3)), ExtReal(3));
  EXPECT_EQ(z_value(ray, v(1, 0), v(0, 1)), ExtReal::pos_inf());
  EXPECT_THROW(z_value(K2, v(-1, 1), v(0, 0)), PreconditionError);
}

TEST(Gerstewitz, TranslationAlongE) {
  const Vector e = v(1, 2);
  for (int i = -3; i <= 3; ++i) {
    const Vector y = v(i, 1 - i);
    EXPECT_EQ(z_value(K2, e, y + e * Rational(5, 2)), ExtReal(z_value(K2, e, y).value() + Rational(5, 2)));
  }
}

TEST(Gerstewitz, Improperness) {
  const auto line = papersuite::line_cone();
  auto rep = improperness_demo(line, v(1, 0), {v(5, 0), v(0, 1), v(-2, -1)});
  ASSERT_EQ(rep.samples.size(), 3u);
  EXPECT_EQ(rep.samples[0].value, ExtReal::neg_inf());
  EXPECT_EQ(rep.samples[1].value, ExtReal::pos_inf());
  EXPECT_TRUE(rep.consistent);
  EXPECT_THROW(improperness_demo(K2, v(1, 0), {v(0, 0)}), PreconditionError);
}

TEST(PairFunctionals, InnerInf) {
  const VSet origin = VSet::points({v(0, 0)});
  EXPECT_EQ(inner_inf(K2, v(1, 1), origin, v(1, 1)).value, ExtReal(-1));
  // inf over p of z(p - q): unbounded below along the ray (-1, 0).
  const VSet neg_ray = VSet::polyhedron({v(0, 0)}, {v(-1, 0)});
  auto r = inner_inf(papersuite::ray_cone(), v(1, 0), neg_ray, v(4, 0));
  EXPECT_EQ(r.value, ExtReal::neg_inf());
  EXPECT_TRUE(r.ray.has_value());
  EXPECT_EQ(inner_inf(K2, v(1, 1), VSet::points({v(3, 1)}), v(3, 1)).value, ExtReal(0));
}

TEST(PairFunctionals, Z1) {
  const VSet tri = VSet::polyhedron({v(0, 0), v(2, 0), v(1, 3)});
  EXPECT_EQ(z1_pair(K2, v(1, 1), tri, tri).value, ExtReal(0));
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  EXPECT_GT(z1_pair(K2, v(1, 1), a[0].set, b[0].set).value, ExtReal(0));
  EXPECT_EQ(z1_pair(K2, v(1, 1), VSet::points({v(0, 0)}), VSet::points({v(1, 1)})).value, ExtReal(-1));
}

TEST(PairFunctionals, Z2) {
  const VSet a = VSet::polyhedron({v(0, 0)}, {v(-1, 0)});
  const VSet b = VSet::polyhedron({v(0, 0)}, {v(1, 0)});
  for (int c : {1, 2, 5}) {
    auto r = z2_pair(papersuite::ray_cone(), v(c, 0), a, b);
    EXPECT_EQ(r.value, ExtReal::neg_inf());
    EXPECT_TRUE(r.inner_ray.has_value());
  }
  EXPECT_EQ(z2_pair(K2, v(1, 1), VSet::points({v(1, 1)}), VSet::points({v(0, 0)})).value, ExtReal(1));
}

TEST(PairFunctionals, SingleSet) {
  const VSet unit = VSet::polyhedron({Vector{0}, Vector{1}});
  EXPECT_EQ(script_z1(cone_orthant(1), Vector{1}, unit).value, ExtReal(0));
  EXPECT_EQ(script_z2(cone_orthant(1), Vector{1}, unit).value, ExtReal(1));
  const VSet zero = VSet::points({Vector{0}});
  EXPECT_EQ(script_z1(cone_orthant(1), Vector{1}, zero).value, ExtReal(0));
  EXPECT_EQ(script_z2(cone_orthant(1), Vector{1}, zero).value, ExtReal(0));
}

TEST(PairFunctionals, GeIdentity) {
  const VSet origin = VSet::points({v(0, 0)});
  const VSet right = VSet::points({v(1, 0)});
  auto g = g_e(v(-1, -1), K2, origin, right);
  EXPECT_LE(g.value, ExtReal(1));
  EXPECT_TRUE(minkowski_member(v(1, 0) - v(-1, -1), origin, K2));
  const VSet tri = VSet::polyhedron({v(0, 0), v(2, 0), v(1, 3)});
  EXPECT_EQ(g_e(v(-1, -1), K2, tri, tri).value, ExtReal(0));
  EXPECT_THROW(g_e(v(1, 1), K2, origin, right), PreconditionError);
  EXPECT_THROW(g_e(v(-1, 0), K2, origin, right), PreconditionError);
}

TEST(PairFunctionals, IntersectionLemma) {
  const VSet a1 = papersuite::l_example_left()[0].set;
  auto inside = check_intersection_lemma(a1, K2, v(1, 1), {1, Rational(1, 8)}, {v(Rational(-1, 2), Rational(-1, 4))});
  EXPECT_TRUE(inside.holds);
  EXPECT_TRUE(inside.probes.front().in_p_plus_k);
  auto outside = check_intersection_lemma(a1, K2, v(1, 1), {1}, {v(Rational(-1, 100), Rational(-101, 100))});
  EXPECT_TRUE(outside.holds);
  EXPECT_TRUE(outside.probes.front().excluding_alpha.has_value());
  auto vacuous = check_intersection_lemma(a1, K2, v(1, 1), {}, {v(0, 0)});
  EXPECT_TRUE(vacuous.holds);
}
