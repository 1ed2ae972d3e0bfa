#include "setopt/lp.hpp"

#include <optional>

namespace setopt::lp {

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), objective_(num_vars), free_(num_vars, false) {}

void LinearProgram::set_objective(Vector c) {
  if (c.dim() != num_vars_) throw PreconditionError("MalformedProgram", "objective has wrong dimension");
  objective_ = std::move(c);
}

void LinearProgram::set_objective_coeff(std::size_t j, Rational c) {
  if (j >= num_vars_) throw PreconditionError("MalformedProgram", "objective index out of range");
  objective_[j] = std::move(c);
}

void LinearProgram::set_free(std::size_t j, bool free) {
  if (j >= num_vars_) throw PreconditionError("MalformedProgram", "variable index out of range");
  free_[j] = free;
}

void LinearProgram::add_constraint(Vector coeffs, Relation rel, Rational rhs) {
  if (coeffs.dim() != num_vars_) throw PreconditionError("MalformedProgram", "constraint has wrong dimension");
  constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

bool LinearProgram::is_feasible(const Vector& x) const {
  if (x.dim() != num_vars_) return false;
  for (std::size_t j = 0; j < num_vars_; ++j) {
    if (!free_[j] && x[j] < 0) return false;
  }
  for (const auto& c : constraints_) {
    Rational lhs = dot(c.coeffs, x);
    if (c.rel == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

bool is_improving_ray(const LinearProgram& lp, const Vector& ray) {
  if (ray.dim() != lp.num_vars() || dot(lp.objective(), ray) >= 0) return false;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (!lp.is_free(j) && ray[j] < 0) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs = dot(c.coeffs, ray);
    if (c.rel == Relation::Equal ? lhs != 0 : lhs < 0) return false;
  }
  return true;
}

bool is_dual_certificate(const LinearProgram& lp, const Vector& y, const Rational& value) {
  const auto& rows = lp.constraints();
  if (y.dim() != rows.size()) return false;
  Rational by = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].rel == Relation::GreaterEq && y[r] < 0) return false;
    by += rows[r].rhs * y[r];
  }
  if (by != value) return false;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    Rational reduced = lp.objective()[j];
    for (std::size_t r = 0; r < rows.size(); ++r) reduced -= rows[r].coeffs[j] * y[r];
    if (lp.is_free(j) ? reduced != 0 : reduced < 0) return false;
  }
  return true;
}

namespace {

// Dense tableau over the standard form  A' x' = b', x' >= 0, b' >= 0.
// Column layout: structural (free variables split in +/-), surplus, artificial.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const auto& rows = lp.constraints();
    m_ = rows.size();
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      pos_col_.push_back(n_++);
      neg_col_.push_back(lp.is_free(j) ? std::optional<std::size_t>(n_++) : std::nullopt);
    }
    surplus_col_.assign(m_, std::nullopt);
    for (std::size_t r = 0; r < m_; ++r) {
      if (rows[r].rel == Relation::GreaterEq) surplus_col_[r] = n_++;
    }
    first_art_ = n_;
    n_ += m_;

    t_.assign(m_, std::vector<Rational>(n_, Rational(0)));
    b_.assign(m_, Rational(0));
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      sign_[r] = rows[r].rhs < 0 ? -1 : 1;
      Rational s = sign_[r];
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        t_[r][pos_col_[j]] = s * rows[r].coeffs[j];
        if (neg_col_[j]) t_[r][*neg_col_[j]] = -s * rows[r].coeffs[j];
      }
      if (surplus_col_[r]) t_[r][*surplus_col_[r]] = -s;
      t_[r][first_art_ + r] = 1;
      b_[r] = s * rows[r].rhs;
      basis_[r] = first_art_ + r;
    }
  }

  LPResult run() {
    // Phase I: minimize the sum of artificials.
    std::vector<Rational> cost(n_, Rational(0));
    for (std::size_t j = first_art_; j < n_; ++j) cost[j] = 1;
    price(cost);
    if (iterate(/*allow_artificial=*/true)) {
      throw InternalError("LPPhaseOne", "phase I cannot be unbounded");
    }
    if (obj_ != 0) return LPResult{};

    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (t_[r][j] != 0) {
          pivot(r, j);
          break;
        }
      }
    }

    std::vector<Rational> cost2(n_, Rational(0));
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      cost2[pos_col_[j]] = lp_.objective()[j];
      if (neg_col_[j]) cost2[*neg_col_[j]] = -lp_.objective()[j];
    }
    price(cost2);
    auto entering = iterate(/*allow_artificial=*/false);

    LPResult res;
    res.point = extract_point();
    if (entering) {
      res.status = LPResult::Status::Unbounded;
      res.ray = extract_ray(*entering);
      if (!lp_.is_feasible(res.point) || !is_improving_ray(lp_, res.ray)) {
        throw InternalError("LPCertificate", "unbounded ray certificate failed verification");
      }
      return res;
    }
    res.status = LPResult::Status::Optimal;
    res.value = dot(lp_.objective(), res.point);
    res.dual = Vector(m_);
    // The reduced cost of artificial column r is -(c_B B^-1)_r in the sign-normalized system.
    for (std::size_t r = 0; r < m_; ++r) res.dual[r] = -d_[first_art_ + r] * sign_[r];
    if (!lp_.is_feasible(res.point) || !is_dual_certificate(lp_, res.dual, res.value)) {
      throw InternalError("LPCertificate", "optimality certificate failed verification");
    }
    return res;
  }

 private:
  void price(const std::vector<Rational>& cost) {
    d_ = cost;
    obj_ = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[r][j] != 0) d_[j] -= cb * t_[r][j];
      }
      obj_ += cb * b_[r];
    }
  }

  // Runs Bland pivots to optimality. Returns the entering column if unbounded.
  std::optional<std::size_t> iterate(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? n_ : first_art_;
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j) {
        if (d_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (t_[r][*enter] <= 0) continue;
        Rational ratio = b_[r] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) {
      if (x != 0) x *= inv;
    }
    b_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    if (d_.size() == n_ && d_[c] != 0) {
      Rational f = d_[c];
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[r][j] != 0) d_[j] -= f * t_[r][j];
      }
      obj_ += f * b_[r];
    }
    basis_[r] = c;
  }

  Vector to_original(const std::vector<Rational>& xs) const {
    Vector x(lp_.num_vars());
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      x[j] = xs[pos_col_[j]];
      if (neg_col_[j]) x[j] -= xs[*neg_col_[j]];
    }
    return x;
  }

  Vector extract_point() const {
    std::vector<Rational> xs(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) xs[basis_[r]] = b_[r];
    return to_original(xs);
  }

  Vector extract_ray(std::size_t enter) const {
    std::vector<Rational> ds(n_, Rational(0));
    ds[enter] = 1;
    for (std::size_t r = 0; r < m_; ++r) ds[basis_[r]] = -t_[r][enter];
    return to_original(ds);
  }

  const LinearProgram& lp_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t first_art_ = 0;
  std::vector<std::size_t> pos_col_;
  std::vector<std::optional<std::size_t>> neg_col_;
  std::vector<std::optional<std::size_t>> surplus_col_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> b_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> d_;
  Rational obj_;
};

}  // namespace

LPResult solve(const LinearProgram& lp) {
  for (const auto& c : lp.constraints()) {
    if (c.coeffs.dim() != lp.num_vars()) throw PreconditionError("MalformedProgram", "row dimension mismatch");
  }
  if (lp.objective().dim() != lp.num_vars()) throw PreconditionError("MalformedProgram", "objective dimension mismatch");
  return Tableau(lp).run();
}

}  // namespace setopt::lp
