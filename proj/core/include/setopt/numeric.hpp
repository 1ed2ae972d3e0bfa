#ifndef SETOPT_NUMERIC_HPP
#define SETOPT_NUMERIC_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace setopt {

/// Exact rational scalar. GMP keeps it canonical (denominator > 0, reduced).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Base class for every error the library raises. `kind()` is a stable
/// machine-readable tag (e.g. "IndeterminateSum") used by the CLI and tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Violated mathematical precondition (direction not in cone, wrong dimension, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Bad input data (malformed numbers, JSON schema violations).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "p", "-p/q" (no whitespace inside). Throws SchemaError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Fixed-dimension vector of exact rationals.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim, Rational(0)) {}
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : coords_(coords) {}

  /// Parses a comma separated list such as "2,-3/4".
  static Vector parse(std::string_view text);
  static Vector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }
  friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Vector& a, const Vector& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Throws PreconditionError("DimensionMismatch") unless the dimensions agree.
void require_same_dim(const Vector& a, const Vector& b, std::string_view where);

Rational dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Extended real: -inf, a finite rational, or +inf.
class ExtReal {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtReal() : kind_(Kind::Finite), value_(0) {}
  ExtReal(Rational r) : kind_(Kind::Finite), value_(std::move(r)) {}  // NOLINT: implicit by design of arithmetic
  ExtReal(long long v) : ExtReal(Rational(v)) {}                      // NOLINT
  ExtReal(int v) : ExtReal(Rational(v)) {}                            // NOLINT

  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  /// Throws PreconditionError when not finite.
  const Rational& value() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend bool operator<(const ExtReal& a, const ExtReal& b);
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  /// Negation swaps the infinities.
  friend ExtReal operator-(const ExtReal& a);

  /// "-inf", "inf" or the rational string.
  std::string str() const;

 private:
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

/// Extended-real sum. +inf + -inf throws Error("IndeterminateSum").
ExtReal ext_add(const ExtReal& a, const ExtReal& b);
/// a + (-b), with the same guard.
ExtReal ext_sub(const ExtReal& a, const ExtReal& b);

/// Max/min of a nonempty list; throws PreconditionError("EmptyList") otherwise.
ExtReal ext_max(std::span<const ExtReal> xs);
ExtReal ext_min(std::span<const ExtReal> xs);
/// Sup/inf with the empty conventions sup{} = -inf, inf{} = +inf.
ExtReal ext_sup(std::span<const ExtReal> xs);
ExtReal ext_inf(std::span<const ExtReal> xs);

}  // namespace setopt

#endif  // SETOPT_NUMERIC_HPP
