#ifndef SETOPT_LP_HPP
#define SETOPT_LP_HPP

#include <vector>

#include "setopt/numeric.hpp"

namespace setopt::lp {

enum class Relation { GreaterEq, Equal };

struct Constraint {
  Vector coeffs;
  Relation rel = Relation::GreaterEq;
  Rational rhs;
};

/// minimize <c, x> subject to rows (a . x >= b or a . x = b); each variable is
/// either >= 0 (the default) or free.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Vector& objective() const noexcept { return objective_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  bool is_free(std::size_t j) const { return free_[j]; }

  void set_objective(Vector c);
  void set_objective_coeff(std::size_t j, Rational c);
  void set_free(std::size_t j, bool free = true);
  void add_constraint(Vector coeffs, Relation rel, Rational rhs);

  /// True iff x satisfies every row and sign bound exactly.
  bool is_feasible(const Vector& x) const;

 private:
  std::size_t num_vars_;
  Vector objective_;
  std::vector<bool> free_;
  std::vector<Constraint> constraints_;
};

struct LPResult {
  enum class Status { Optimal, Unbounded, Infeasible };

  Status status = Status::Infeasible;
  /// Optimal value (Optimal only).
  Rational value;
  /// Optimal point, or a feasible starting point of the ray when Unbounded.
  Vector point;
  /// Recession direction with <c, ray> < 0 (Unbounded only).
  Vector ray;
  /// One multiplier per constraint; b . y == value (Optimal only).
  Vector dual;

  bool optimal() const noexcept { return status == Status::Optimal; }
  bool unbounded() const noexcept { return status == Status::Unbounded; }
  bool infeasible() const noexcept { return status == Status::Infeasible; }
};

/// Two-phase primal simplex with Bland's rule over exact rationals. Every
/// certificate (point, ray, dual) is checked before returning; a failed check
/// throws InternalError. Malformed input throws PreconditionError("MalformedProgram").
LPResult solve(const LinearProgram& lp);

/// Checks a ray certificate: feasibility-preserving recession direction that
/// strictly decreases the objective.
bool is_improving_ray(const LinearProgram& lp, const Vector& ray);

/// Checks dual feasibility of y and that b . y equals `value`.
bool is_dual_certificate(const LinearProgram& lp, const Vector& y, const Rational& value);

}  // namespace setopt::lp

#endif  // SETOPT_LP_HPP
