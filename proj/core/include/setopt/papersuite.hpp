#ifndef SETOPT_PAPERSUITE_HPP
#define SETOPT_PAPERSUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "setopt/cones.hpp"
#include "setopt/sets.hpp"
#include "setopt/usop.hpp"

// Frozen reproductions of the worked examples and counterexamples, plus a suite
// that recomputes every derived expectation with the brute-force oracles.

namespace setopt::papersuite {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  /// Recomputed independently by the oracle module.
  bool oracle = false;
};

struct CaseResult {
  std::string id;
  std::string title;
  std::vector<Check> checks;
  /// Unexpected exception text, if any.
  std::optional<std::string> error;
  double seconds = 0;

  bool pass() const;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool pass() const;
};

struct Options {
  int density = 16;
  std::uint64_t seed = 7;
};

// ---- fixtures ------------------------------------------------------------------

/// Triangles and trapezium of the l-but-not-L example: A = {A1, A2}, B = {B1, B2}.
SetFamily l_example_left();
SetFamily l_example_right();
/// The u-but-not-U example.
SetFamily u_example_left();
SetFamily u_example_right();
/// {(x, 0)} as a cone with empty interior and non-pointed line cone.
PolyhedralCone ray_cone();
PolyhedralCone line_cone();
/// 64 rational points on the unit circle around (4, 4), taken as a polygon.
VSet circle_polygon();
/// Three decisions, two scenarios; x3 infeasible.
usop::Instance desk_instance();
/// x* L-robust although the inf-gap criterion meets C.
usop::Instance converse_instance();

// ---- suites --------------------------------------------------------------------

/// One case by id "a".."i".
CaseResult run_case(const std::string& id, const Options& opt = {});
SuiteReport run_all(const Options& opt = {});
/// Oracle closure: every derived value recomputed by bisection or sampling.
SuiteReport derived_suite(const Options& opt = {});

/// Deterministic: carries no timing.
nlohmann::json to_json(const SuiteReport& r);
/// Human-readable, with per-case timing.
std::string to_table(const SuiteReport& r);

}  // namespace setopt::papersuite

#endif  // SETOPT_PAPERSUITE_HPP
