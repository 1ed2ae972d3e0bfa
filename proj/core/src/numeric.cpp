#include "setopt/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace setopt {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw SchemaError("MalformedRational", "cannot parse '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(Integer(n));
  std::string d(den);
  if (d[0] == '+') d.erase(0, 1);
  Integer dd(d);
  if (dd == 0) throw SchemaError("MalformedRational", "zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(n), dd);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Vector Vector::parse(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vector(std::move(coords));
}

Vector Vector::unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_dim(*this, o, "vector sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_dim(*this, o, "vector difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

void require_same_dim(const Vector& a, const Vector& b, std::string_view where) {
  if (a.dim() != b.dim()) {
    throw PreconditionError("DimensionMismatch", std::string(where) + ": " + std::to_string(a.dim()) +
                                                     " vs " + std::to_string(b.dim()));
  }
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << to_string(v); }

const Rational& ExtReal::value() const {
  if (kind_ != Kind::Finite) throw PreconditionError("NotFinite", "extended real " + str() + " has no finite value");
  return value_;
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtReal::Kind::Finite || a.value_ == b.value_;
}

bool operator<(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.kind_ == ExtReal::Kind::Finite && a.value_ < b.value_;
}

ExtReal operator-(const ExtReal& a) {
  switch (a.kind_) {
    case ExtReal::Kind::NegInf: return ExtReal::pos_inf();
    case ExtReal::Kind::PosInf: return ExtReal::neg_inf();
    default: return ExtReal(Rational(-a.value_));
  }
}

std::string ExtReal::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return to_string(value_);
  }
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.str(); }

ExtReal ext_add(const ExtReal& a, const ExtReal& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw Error("IndeterminateSum", "inf + -inf is undefined");
  }
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return ExtReal(Rational(a.value() + b.value()));
}

ExtReal ext_sub(const ExtReal& a, const ExtReal& b) { return ext_add(a, -b); }

ExtReal ext_max(std::span<const ExtReal> xs) {
  if (xs.empty()) throw PreconditionError("EmptyList", "max of empty list");
  return *std::max_element(xs.begin(), xs.end());
}

ExtReal ext_min(std::span<const ExtReal> xs) {
  if (xs.empty()) throw PreconditionError("EmptyList", "min of empty list");
  return *std::min_element(xs.begin(), xs.end());
}

ExtReal ext_sup(std::span<const ExtReal> xs) { return xs.empty() ? ExtReal::neg_inf() : ext_max(xs); }

ExtReal ext_inf(std::span<const ExtReal> xs) { return xs.empty() ? ExtReal::pos_inf() : ext_min(xs); }

}  // namespace setopt
