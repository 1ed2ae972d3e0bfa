#include <gtest/gtest.h>

#include "setopt/cones.hpp"

using namespace setopt;

namespace {

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }

bool same_cone_on_grid(const PolyhedralCone& a, const PolyhedralCone& b) {
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      const Vector y = v(Rational(i, 2), Rational(j, 2));
      if (contains(a, y) != contains(b, y)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Cones, Orthant) {
  EXPECT_EQ(cone_orthant(2).facets().size(), 2u);
  EXPECT_EQ(cone_orthant(1).facets().front(), Vector{1});
  EXPECT_EQ(cone_orthant(3).facets().size(), 3u);
  EXPECT_TRUE(is_pointed(cone_orthant(3)));
}

TEST(Cones, Halfspace) {
  EXPECT_FALSE(is_pointed(cone_halfspace(v(1, 0))));
  EXPECT_TRUE(is_pointed(cone_halfspace(Vector{1})));
  EXPECT_TRUE(contains(cone_halfspace(v(1, 1)), v(2, -1)));
  EXPECT_FALSE(contains(cone_halfspace(v(1, 1)), v(-2, 1)));
  EXPECT_THROW(cone_halfspace(v(0, 0)), PreconditionError);
}

TEST(Cones, FromGenerators) {
  const PolyhedralCone ray = cone_from_generators({v(1, 0)});
  EXPECT_TRUE(same_cone_on_grid(ray, PolyhedralCone(2, {v(1, 0), v(0, 1), v(0, -1)})));
  EXPECT_TRUE(same_cone_on_grid(cone_from_generators({v(1, 0), v(0, 1)}), cone_orthant(2)));
  EXPECT_TRUE(same_cone_on_grid(cone_from_generators({v(1, 1), v(1, -1)}), PolyhedralCone(2, {v(1, 1), v(1, -1)})));
  EXPECT_THROW(cone_from_generators({v(1, 0), v(-1, 0), v(0, 1), v(0, -1)}), PreconditionError);
}

TEST(Cones, FromGeneratorsInSpace) {
  const PolyhedralCone k = cone_from_generators({Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{1, 1, 2}});
  EXPECT_TRUE(contains(k, Vector{2, 2, 2}));
  EXPECT_FALSE(contains(k, Vector{0, 0, 1}));
  EXPECT_TRUE(is_pointed(k));
}

TEST(Cones, PointedAndMembership) {
  EXPECT_TRUE(is_pointed(cone_orthant(2)));
  EXPECT_TRUE(is_pointed(PolyhedralCone(2, {v(1, 0), v(0, 1), v(0, -1)})));
  EXPECT_TRUE(contains(cone_orthant(2), v(1, 0)));
  EXPECT_FALSE(is_interior(cone_orthant(2), v(1, 0)));
  EXPECT_TRUE(is_interior(cone_orthant(2), v(2, 3)));
  EXPECT_FALSE(contains(PolyhedralCone(2, {v(1, 0), v(0, 1), v(0, -1)}), v(0, 1)));
  EXPECT_THROW(contains(cone_orthant(2), Vector{1}), PreconditionError);
}

TEST(Cones, DualGenerators) {
  auto d = dual_generators(cone_orthant(2));
  ASSERT_EQ(d.size(), 2u);
  auto h = dual_generators(cone_halfspace(v(1, 1)));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.front(), v(1, 1));
  const PolyhedralCone ray(2, {v(1, 0), v(0, 1), v(0, -1)});
  EXPECT_TRUE(in_dual_cone(ray, v(0, -5)));
  EXPECT_FALSE(in_dual_cone(ray, v(-1, 0)));
}

TEST(Cones, Directions) {
  EXPECT_TRUE(Direction(v(1, 1), cone_orthant(2)).interior());
  EXPECT_FALSE(Direction(v(1, 0), cone_orthant(2)).interior());
  EXPECT_THROW(Direction(v(-1, 0), cone_orthant(2)), PreconditionError);
  EXPECT_THROW(Direction(v(0, 0), cone_orthant(2)), PreconditionError);
  const Rational m = interior_margin(cone_orthant(2), v(1, 1));
  EXPECT_GT(m, 0);
  EXPECT_TRUE(contains(cone_orthant(2), v(1, 1) - v(m, 0)));
}

TEST(Cones, Negation) {
  const PolyhedralCone n = cone_orthant(2).negated();
  EXPECT_TRUE(contains(n, v(-1, -2)));
  EXPECT_FALSE(contains(n, v(1, 0)));
}
