#include "setopt/linalg.hpp"


namespace setopt::linalg {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_matrix(const std::vector<Vector>& rows) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

}  // namespace

std::size_t rank(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  auto m = to_matrix(rows);
  return rref(m, rows.front().dim()).size();
}

std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t dim) {
  auto m = to_matrix(rows);
  auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v(dim);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector primitive(const Vector& v) {
  if (v.is_zero()) return v;
  Integer lcm_den = 1;
  for (const auto& c : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(c)));
  Integer g = 0;
  for (const auto& c : v) g = boost::multiprecision::gcd(g, Integer(abs(numerator(c) * (lcm_den / denominator(c)))));
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(numerator(v[i]) * (lcm_den / denominator(v[i])), g);
  return out;
}

}  // namespace setopt::linalg
