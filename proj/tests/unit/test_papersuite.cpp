#include <gtest/gtest.h>

#include "setopt/generate.hpp"
#include "setopt/papersuite.hpp"

using namespace setopt;

TEST(PaperSuite, EveryCasePasses) {
  for (const char* id : {"a", "b", "c", "d", "e", "f", "g", "h", "i"}) {
    auto c = papersuite::run_case(id);
    EXPECT_TRUE(c.pass()) << id << (c.error ? ": " + *c.error : "");
  }
  EXPECT_THROW(papersuite::run_case("z"), PreconditionError);
}

TEST(PaperSuite, JsonIsDeterministic) {
  const auto a = papersuite::to_json(papersuite::run_all()).dump();
  const auto b = papersuite::to_json(papersuite::run_all()).dump();
  EXPECT_EQ(a, b);
}

TEST(PaperSuite, CirclePolygon) {
  const VSet p = papersuite::circle_polygon();
  EXPECT_EQ(p.vertices().size(), 64u);
  for (const auto& v : p.vertices()) {
    const Vector d = v - Vector{4, 4};
    EXPECT_EQ(dot(d, d), 1);
  }
}

TEST(Generator, Deterministic) {
  gen::Generator a(5);
  gen::Generator b(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.point(3), b.point(3));
}

TEST(Generator, PlantedSetsLieAboveAndBelow) {
  gen::Generator g(8);
  for (const auto& k : {gen::orthant(2), gen::wedge(2), gen::orthant(3), gen::wedge(3)}) {
    for (const auto& e : k.directions) EXPECT_TRUE(contains(k.cone, e));
    const VSet p = g.polytope(k.cone.dim(), 3);
    const VSet up = g.above(p, k);
    const VSet down = g.below(p, k);
    for (const auto& q : up.vertices()) EXPECT_TRUE(minkowski_member(q, p, k.cone));
    for (const auto& q : down.vertices()) EXPECT_TRUE(minkowski_member(q, p, k.cone.negated()));
  }
}
