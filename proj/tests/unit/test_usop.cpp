#include <gtest/gtest.h>

#include "setopt/generate.hpp"
#include "setopt/papersuite.hpp"
#include "setopt/usop.hpp"

using namespace setopt;
using namespace setopt::usop;

namespace {

Vector v(Rational a, Rational b) { return Vector{std::move(a), std::move(b)}; }

Instance single() {
  SetTable h = {{VSet::points({v(0, 0)})}};
  SetTable f = {{VSet::points({Vector{0}})}};
  return Instance({"only"}, {"u"}, {cone_orthant(2), v(1, 1), h}, {{cone_orthant(1), Vector{1}, f}});
}

}  // namespace

TEST(Usop, Feasibility) {
  const Instance desk = papersuite::desk_instance();
  EXPECT_EQ(feasibility_vector(desk, "x1").front(), ExtReal(-1));
  EXPECT_EQ(feasibility_vector(desk, "x2").front(), ExtReal(0));
  EXPECT_EQ(feasibility_vector(desk, "x3").front(), ExtReal(1));
  EXPECT_EQ(robust_feasible_set(desk), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_TRUE(directly_feasible(desk, "x2"));
  EXPECT_FALSE(directly_feasible(desk, "x3"));
  EXPECT_THROW(feasibility_vector(desk, "nope"), PreconditionError);
  EXPECT_EQ(robust_feasible_set(single()), std::vector<std::string>{"only"});
}

TEST(Usop, Robustness) {
  const Instance desk = papersuite::desk_instance();
  for (Relation r : {Relation::l, Relation::u, Relation::s, Relation::L, Relation::U, Relation::S}) {
    EXPECT_TRUE(is_robust(desk, "x1", {r, Variant::Strict}).robust);
    EXPECT_TRUE(is_robust(single(), "only", {r, Variant::Strict}).robust);
  }
  auto x2 = is_robust(desk, "x2", {Relation::L, Variant::Strict});
  EXPECT_FALSE(x2.robust);
  EXPECT_EQ(x2.witness, "x1");
  EXPECT_THROW(is_robust(desk, "x3", {Relation::L, Variant::Strict}), PreconditionError);
}

TEST(Usop, MinimalVariantToleratesEquivalentCompetitors) {
  SetTable h = {{VSet::points({v(0, 0)})}, {VSet::points({v(0, 0)})}};
  SetTable f = {{VSet::points({Vector{-1}})}, {VSet::points({Vector{-1}})}};
  const Instance twin({"a", "b"}, {"u"}, {cone_orthant(2), v(1, 1), h}, {{cone_orthant(1), Vector{1}, f}});
  EXPECT_FALSE(is_robust(twin, "a", {Relation::l, Variant::Strict}).robust);
  EXPECT_TRUE(is_robust(twin, "a", {Relation::l, Variant::Minimal}).robust);
  EXPECT_TRUE(is_robust(twin, "a", {Relation::L, Variant::MinimalMixed}).robust);
}

TEST(Usop, Gaps) {
  const Instance desk = papersuite::desk_instance();
  auto t = gap_table(desk, "x1", 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].decision, "x2");
  EXPECT_EQ(t[0].gap, ExtReal(1));
  EXPECT_EQ(t[1].decision, "x3");
  EXPECT_EQ(t[1].feas.front(), ExtReal(1));
  EXPECT_THROW(gap_table(desk, "x1", 6), PreconditionError);
  EXPECT_FALSE(r_hat_meets_C(desk, "x1", 2).meets);
  auto m = r_hat_meets_C(desk, "x2", 2);
  EXPECT_TRUE(m.meets);
  EXPECT_EQ(m.witness, "x1");
  EXPECT_FALSE(r_hat_meets_C(single(), "only", 2).meets);

  SetTable h = {{VSet::points({v(1, 2)})}, {VSet::points({v(1, 2)})}};
  SetTable f = {{VSet::points({Vector{-1}})}, {VSet::points({Vector{-1}})}};
  const Instance same({"a", "b"}, {"u"}, {cone_orthant(2), v(1, 1), h}, {{cone_orthant(1), Vector{1}, f}});
  EXPECT_EQ(gap_table(same, "a", 3).front().gap, ExtReal(0));
}

TEST(Usop, TheoremChecks) {
  const Instance desk = papersuite::desk_instance();
  for (Relation t : {Relation::L, Relation::U, Relation::S}) {
    EXPECT_TRUE(verify_characterization(desk, "x1", t).consistent);
    EXPECT_TRUE(verify_characterization(desk, "x2", t).consistent);
  }
  auto s = verify_sufficiency(desk, "x1", 1);
  EXPECT_TRUE(s.premise);
  EXPECT_TRUE(s.robust.robust);
  auto vac = verify_sufficiency(desk, "x2", 1);
  EXPECT_FALSE(vac.premise);
  auto conv = verify_sufficiency(papersuite::converse_instance(), "xs", 1);
  EXPECT_TRUE(conv.converse_failure);
  EXPECT_THROW(verify_characterization(desk, "x1", Relation::l), PreconditionError);
}

TEST(Usop, DualNecessary) {
  const Instance desk = papersuite::desk_instance();
  auto d = dual_necessary(desk, "x1", Relation::L);
  EXPECT_EQ(d.status, DualStatus::Confirmed);
  EXPECT_TRUE(d.good_w.has_value());
  EXPECT_EQ(dual_necessary(desk, "x2", Relation::L).status, DualStatus::NotApplicable);
  SetTable h = {{VSet::points({v(0, 0), v(1, -1)})}, {VSet::points({v(1, 1)})}};
  SetTable f = {{VSet::points({Vector{-1}})}, {VSet::points({Vector{-1}})}};
  const Instance nc({"a", "b"}, {"u"}, {cone_orthant(2), v(1, 1), h}, {{cone_orthant(1), Vector{1}, f}});
  EXPECT_THROW(dual_necessary(nc, "a", Relation::L), PreconditionError);
}

TEST(Usop, ParseNames) {
  EXPECT_EQ(parse_relation("S"), Relation::S);
  EXPECT_EQ(parse_variant("minimal-mixed"), Variant::MinimalMixed);
  EXPECT_THROW(parse_relation("x"), SchemaError);
}

TEST(Usop, RandomCharacterization) {
  gen::Generator g(99);
  for (int i = 0; i < 15; ++i) {
    const Instance inst = g.usop_instance(4, 3);
    for (const auto& x : robust_feasible_set(inst)) {
      for (Relation t : {Relation::L, Relation::U, Relation::S}) EXPECT_TRUE(verify_characterization(inst, x, t).consistent);
    }
  }
}
