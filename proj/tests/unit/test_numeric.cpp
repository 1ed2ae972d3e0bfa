#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "setopt/numeric.hpp"

using namespace setopt;

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(parse_rational("-2/-4")), "1/2");
  EXPECT_THROW(parse_rational("1/0"), SchemaError);
  EXPECT_THROW(parse_rational("0.5"), SchemaError);
  EXPECT_THROW(parse_rational(""), SchemaError);
}

TEST(Rational, FieldLawsOnRandomTriples) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int i = 0; i < 200; ++i) {
    Rational a(d(rng), den(rng));
    Rational b(d(rng), den(rng));
    Rational c(d(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Vector, ParseAndArithmetic) {
  Vector v = Vector::parse("2,-3/4");
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_EQ(v[1], Rational(-3, 4));
  EXPECT_EQ(dot(v, Vector{1, 4}), Rational(-1));
  const Vector expected{3, Rational(1, 4)};
  EXPECT_EQ((v + Vector{1, 1}), expected);
  EXPECT_THROW(require_same_dim(v, Vector{1}, "test"), PreconditionError);
}

TEST(ExtReal, AdditionTable) {
  EXPECT_EQ(ext_add(ExtReal(Rational(1, 2)), ExtReal(Rational(1, 3))), ExtReal(Rational(5, 6)));
  EXPECT_EQ(ext_add(ExtReal::pos_inf(), ExtReal(-7)), ExtReal::pos_inf());
  EXPECT_EQ(ext_add(ExtReal::neg_inf(), ExtReal(3)), ExtReal::neg_inf());
  try {
    ext_add(ExtReal::pos_inf(), ExtReal::neg_inf());
    FAIL() << "no error";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), "IndeterminateSum");
  }
  EXPECT_THROW(ext_sub(ExtReal::pos_inf(), ExtReal::pos_inf()), Error);
}

TEST(ExtReal, ExtremaAndConventions) {
  std::vector<ExtReal> xs = {ExtReal(1), ExtReal::neg_inf(), ExtReal(3)};
  EXPECT_EQ(ext_max(xs), ExtReal(3));
  EXPECT_EQ(ext_min(xs), ExtReal::neg_inf());
  std::vector<ExtReal> none;
  EXPECT_EQ(ext_inf(none), ExtReal::pos_inf());
  EXPECT_EQ(ext_sup(none), ExtReal::neg_inf());
  EXPECT_THROW(ext_max(none), PreconditionError);
  std::vector<ExtReal> two = {ExtReal::neg_inf(), ExtReal::neg_inf()};
  EXPECT_EQ(ext_sup(two), ExtReal::neg_inf());
}

TEST(ExtReal, TotalOrderAndMonotoneSum) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 9);
  auto draw = [&] {
    int k = pick(rng);
    if (k == 0) return ExtReal::neg_inf();
    if (k == 1) return ExtReal::pos_inf();
    return ExtReal(Rational(k - 5, 3));
  };
  for (int i = 0; i < 300; ++i) {
    ExtReal a = draw();
    ExtReal b = draw();
    ExtReal c = draw();
    EXPECT_EQ((a < b) + (a == b) + (b < a), 1);
    try {
      EXPECT_EQ(ext_add(a, b), ext_add(b, a));
      if (a <= b) {
        EXPECT_LE(ext_add(a, c), ext_add(b, c));
      }
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), "IndeterminateSum");
    }
  }
  EXPECT_EQ(-ExtReal::pos_inf(), ExtReal::neg_inf());
  EXPECT_EQ(ExtReal::pos_inf().str(), "inf");
  EXPECT_THROW(ExtReal::neg_inf().value(), PreconditionError);
}
