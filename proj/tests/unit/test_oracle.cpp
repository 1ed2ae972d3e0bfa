#include <gtest/gtest.h>

#include "setopt/oracle.hpp"
#include "setopt/papersuite.hpp"
#include "setopt/scalarize.hpp"

using namespace setopt;
using namespace setopt::oracle;

namespace {

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }

}  // namespace

TEST(Oracle, Bisection) {
  auto b = z_bisection(cone_orthant(2), v(1, 1), v(2, 3), -1, 1, 40);
  EXPECT_EQ(b.kind, BisectionResult::Kind::Interval);
  EXPECT_TRUE(b.brackets(ExtReal(3)));
  EXPECT_LE(b.hi - b.lo, Rational(1, 1 << 20));
  EXPECT_EQ(z_bisection(papersuite::ray_cone(), v(1, 0), v(0, 1), -1, 1, 40).kind, BisectionResult::Kind::PosInf);
  EXPECT_TRUE(z_bisection(cone_orthant(2), v(1, 1), v(0, 0), -1, 1, 40).brackets(ExtReal(0)));
  EXPECT_EQ(z_bisection(papersuite::line_cone(), v(1, 0), v(5, 0), -1, 1, 40).kind, BisectionResult::Kind::NegInf);
}

TEST(Oracle, Samples) {
  const VSet tri = VSet::polyhedron({v(0, 0), v(1, 0), v(0, 1)});
  EXPECT_EQ(sample_set(tri, 4).points.size(), 15u);
  EXPECT_EQ(sample_set(VSet::points({v(1, 1)}), 8).points.size(), 1u);
  EXPECT_EQ(sample_set(VSet::polyhedron({v(0, 0)}, {v(1, 0)}), 4).points.size(), 3u);
  for (const auto& p : sample_set(tri, 7).points) EXPECT_TRUE(set_contains(tri, p));
}

TEST(Oracle, SampledPairs) {
  const auto k = cone_orthant(2);
  const VSet p = VSet::points({v(0, 0)});
  const VSet q = VSet::points({v(1, 1)});
  auto s = zpair_sampled(k, v(1, 1), p, q, 4, PairKind::Z1);
  EXPECT_EQ(s.both_sampled, z1_pair(k, v(1, 1), p, q).value);
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  auto t = zpair_sampled(k, v(1, 1), a[0].set, b[0].set, 16, PairKind::Z1);
  EXPECT_GT(t.both_sampled, ExtReal(0));
  EXPECT_LE(t.outer_sampled, z1_pair(k, v(1, 1), a[0].set, b[0].set).value);
  const VSet left = VSet::polyhedron({v(0, 0)}, {v(-1, 0)});
  const VSet right = VSet::polyhedron({v(0, 0)}, {v(1, 0)});
  EXPECT_EQ(zpair_sampled(papersuite::ray_cone(), v(2, 0), left, right, 4, PairKind::Z2).outer_sampled,
            ExtReal::neg_inf());
}
