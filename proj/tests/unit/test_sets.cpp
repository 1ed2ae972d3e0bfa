#include <gtest/gtest.h>

#include <random>

#include "setopt/papersuite.hpp"
#include "setopt/sets.hpp"

using namespace setopt;

namespace {

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }
VSet square(Rational x0, Rational y0) {
  return VSet::polyhedron({v(x0, y0), v(x0 + 1, y0), v(x0 + 1, y0 + 1), v(x0, y0 + 1)});
}

}  // namespace

TEST(Sets, Construction) {
  EXPECT_THROW(VSet::points({}), PreconditionError);
  EXPECT_THROW(VSet::points({v(0, 0), Vector{1}}), PreconditionError);
  VSet r = VSet::polyhedron({v(0, 0)}, {v(1, 0)});
  EXPECT_FALSE(r.is_bounded());
  EXPECT_TRUE(square(0, 0).is_bounded());
  EXPECT_EQ(square(0, 0).translated(v(1, 1)).vertices().front(), v(1, 1));
}

TEST(Sets, Membership) {
  EXPECT_TRUE(set_contains(square(0, 0), v(Rational(1, 2), 1)));
  EXPECT_FALSE(set_contains(square(0, 0), v(2, 0)));
  EXPECT_TRUE(set_contains(VSet::polyhedron({v(0, 0)}, {v(1, 0)}), v(7, 0)));
  EXPECT_FALSE(set_contains(VSet::points({v(0, 0), v(2, 0)}), v(1, 0)));
}

TEST(Sets, Clip) {
  auto r = polygon_clip_2d(square(0, 0), square(Rational(1, 2), 0));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(polygon_area_2d(*r), Rational(1, 2));
  const auto a = papersuite::l_example_left();
  auto edge = polygon_clip_2d(a[0].set, a[1].set);
  ASSERT_TRUE(edge.has_value());
  EXPECT_EQ(polygon_area_2d(*edge), 0);
  EXPECT_FALSE(polygon_clip_2d(square(0, 0), square(5, 5)).has_value());
  EXPECT_THROW(polygon_clip_2d(VSet::polyhedron({v(0, 0)}, {v(1, 0)}), square(0, 0)), PreconditionError);
}

TEST(Sets, ClipIsSymmetric) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-8, 8);
  for (int i = 0; i < 50; ++i) {
    auto tri = [&] {
      return VSet::polyhedron({v(Rational(d(rng), 4), Rational(d(rng), 4)), v(Rational(d(rng), 4), Rational(d(rng), 4)),
                               v(Rational(d(rng), 4), Rational(d(rng), 4))});
    };
    VSet p = tri();
    VSet q = tri();
    auto a = polygon_clip_2d(p, q);
    auto b = polygon_clip_2d(q, p);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(polygon_area_2d(*a), polygon_area_2d(*b));
    }
  }
}

TEST(Sets, Area) {
  EXPECT_EQ(polygon_area_2d(VSet::polyhedron({v(0, 0), v(-1, 0), v(0, -1)})), Rational(1, 2));
  const auto a = papersuite::l_example_left();
  EXPECT_EQ(polygon_area_2d(a[0].set), Rational(1, 4));
  EXPECT_EQ(polygon_area_2d(a[0].set) + polygon_area_2d(a[1].set), Rational(1, 2));
  EXPECT_EQ(polygon_area_2d(VSet::polyhedron({v(0, 0), v(1, 1)})), 0);
}

TEST(Sets, UnionEquality) {
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  EXPECT_TRUE(union_equals_2d(a, b));
  EXPECT_FALSE(union_equals_2d(a, SetFamily({a[0]})));
  EXPECT_TRUE(union_equals_2d(a, a));
  EXPECT_TRUE(union_equals_2d(papersuite::u_example_left(), papersuite::u_example_right()));
  std::vector<FamilyMember> many;
  for (int i = 0; i < 7; ++i) many.push_back({"m" + std::to_string(i), square(i, 0)});
  EXPECT_THROW(union_equals_2d(SetFamily(many), a), PreconditionError);
}

TEST(Sets, MinkowskiMember) {
  const auto k = cone_orthant(2);
  const VSet origin = VSet::points({v(0, 0)});
  EXPECT_TRUE(minkowski_member(v(1, 1), origin, k));
  EXPECT_FALSE(minkowski_member(v(-1, -1), origin, k));
  EXPECT_FALSE(minkowski_member(v(0, Rational(-3, 4)), papersuite::l_example_left()[0].set, k));
  EXPECT_THROW(minkowski_member(Vector{1}, origin, k), PreconditionError);
}

TEST(Sets, MinkowskiMemberAgainstGrid) {
  // q in P + K for P = conv{(0,0),(1,0),(0,1)}: brute force over a grid of P.
  const VSet tri = VSet::polyhedron({v(0, 0), v(1, 0), v(0, 1)});
  const auto k = cone_orthant(2);
  for (int i = -4; i <= 4; ++i) {
    for (int j = -4; j <= 4; ++j) {
      const Vector q = v(Rational(i, 4), Rational(j, 4));
      bool brute = false;
      for (int a = 0; a <= 8 && !brute; ++a) {
        for (int b = 0; a + b <= 8 && !brute; ++b) {
          brute = contains(k, q - v(Rational(a, 8), Rational(b, 8)));
        }
      }
      EXPECT_EQ(minkowski_member(q, tri, k), brute) << to_string(q);
    }
  }
}

TEST(Sets, KProper) {
  const auto k = cone_orthant(2);
  EXPECT_TRUE(is_K_proper(square(0, 0), k).proper);
  EXPECT_TRUE(is_K_proper(VSet::polyhedron({v(0, 0)}, {v(1, 0), v(-1, 0)}), k).proper);
  EXPECT_FALSE(is_K_proper(VSet::polyhedron({v(0, 0)}, {v(-1, 0), v(0, -1)}), k).proper);
}
