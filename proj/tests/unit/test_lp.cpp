#include <gtest/gtest.h>

#include "setopt/lp.hpp"

using namespace setopt;
using setopt::lp::LinearProgram;
using setopt::lp::Relation;

TEST(Simplex, OptimalWithDualCertificate) {
  // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6
  LinearProgram p(2);
  p.set_objective(Vector{-1, -1});
  p.add_constraint(Vector{-1, -2}, Relation::GreaterEq, -4);
  p.add_constraint(Vector{-3, -1}, Relation::GreaterEq, -6);
  auto r = lp::solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, Rational(-14, 5));
  EXPECT_EQ(r.point, (Vector{Rational(8, 5), Rational(6, 5)}));
  EXPECT_TRUE(p.is_feasible(r.point));
  EXPECT_TRUE(lp::is_dual_certificate(p, r.dual, r.value));
}

TEST(Simplex, UnboundedWithRay) {
  LinearProgram p(2);
  p.set_objective(Vector{-1, 0});
  p.add_constraint(Vector{1, -1}, Relation::GreaterEq, 0);
  auto r = lp::solve(p);
  ASSERT_TRUE(r.unbounded());
  EXPECT_TRUE(lp::is_improving_ray(p, r.ray));
}

TEST(Simplex, Infeasible) {
  LinearProgram p(1);
  p.add_constraint(Vector{1}, Relation::GreaterEq, 2);
  p.add_constraint(Vector{-1}, Relation::GreaterEq, -1);
  EXPECT_TRUE(lp::solve(p).infeasible());
}

TEST(Simplex, FreeVariablesAndEqualities) {
  // min x  s.t.  x - y = -3, y >= 0 is default, x free
  LinearProgram p(2);
  p.set_free(0);
  p.set_objective(Vector{1, 0});
  p.add_constraint(Vector{1, -1}, Relation::Equal, -3);
  auto r = lp::solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, Rational(-3));
}

TEST(Simplex, DegenerateCyclingExample) {
  // Beale's cycling example; Bland's rule terminates.
  LinearProgram p(4);
  p.set_objective(Vector{Rational(-3, 4), 150, Rational(-1, 50), 6});
  p.add_constraint(Vector{Rational(-1, 4), 60, Rational(1, 25), -9}, Relation::GreaterEq, 0);
  p.add_constraint(Vector{Rational(-1, 2), 90, Rational(1, 50), -3}, Relation::GreaterEq, 0);
  p.add_constraint(Vector{0, 0, -1, 0}, Relation::GreaterEq, -1);
  auto r = lp::solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, Rational(-1, 20));
}

TEST(Simplex, MalformedProgram) {
  LinearProgram p(2);
  EXPECT_THROW(p.add_constraint(Vector{1}, Relation::GreaterEq, 0), PreconditionError);
}
