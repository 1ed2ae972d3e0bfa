#ifndef SETOPT_USOP_HPP
#define SETOPT_USOP_HPP

#include <optional>
#include <string>
#include <vector>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"
#include "setopt/relations.hpp"
#include "setopt/sets.hpp"

namespace setopt::usop {

/// Table indexed [decision][uncertainty].
using SetTable = std::vector<std::vector<VSet>>;

struct ObjectiveBlock {
  PolyhedralCone cone;
  Vector e;
  SetTable H;
};

/// One constraint F_i(x, u) in -K'_i, each with its own cone and direction.
struct ConstraintBlock {
  PolyhedralCone cone;
  Vector e;
  SetTable F;
};

/// Uncertain set-valued problem over finite decision and uncertainty sets.
class Instance {
 public:
  /// Validates table shapes and dimensions, pointed cones and e in K \ {0}.
  Instance(std::vector<std::string> decisions, std::vector<std::string> uncertainty, ObjectiveBlock objective,
           std::vector<ConstraintBlock> constraints);

  const std::vector<std::string>& decisions() const noexcept { return decisions_; }
  const std::vector<std::string>& uncertainty() const noexcept { return uncertainty_; }
  const ObjectiveBlock& objective() const noexcept { return objective_; }
  const std::vector<ConstraintBlock>& constraints() const noexcept { return constraints_; }

  /// Throws PreconditionError("UnknownDecision").
  std::size_t index_of(const std::string& decision) const;
  /// {H(x, u)} labelled by the uncertainty labels.
  SetFamily family(std::size_t x) const;

 private:
  std::vector<std::string> decisions_;
  std::vector<std::string> uncertainty_;
  ObjectiveBlock objective_;
  std::vector<ConstraintBlock> constraints_;
};

/// Componentwise sup over u of sup over F_i(x, u) of z^{e'_i, K'_i}.
std::vector<ExtReal> feasibility_vector(const Instance& inst, const std::string& x);
/// The same with explicit directions e'_i (each must lie in K'_i \ {0}).
std::vector<ExtReal> feasibility_vector(const Instance& inst, const std::string& x,
                                        const std::vector<Vector>& e_primes);

/// F_i(x, u) in -K'_i for every i and u, by direct containment.
bool directly_feasible(const Instance& inst, const std::string& x);

/// Decisions with every feasibility component <= 0, in decision order. Checked
/// against direct containment and against a second choice of e'; a mismatch
/// throws InternalError("LevelSetBridge") / ("FeasibleSetDependsOnDirection").
std::vector<std::string> robust_feasible_set(const Instance& inst);

enum class Relation { l, u, s, L, U, S };
/// Strict: no competitor is related to x*. Minimal: every related competitor is
/// related back with the same relation. MinimalMixed: lowercase hypothesis,
/// uppercase conclusion, as the definition is literally worded.
enum class Variant { Strict, Minimal, MinimalMixed };

struct RobustKind {
  Relation relation = Relation::L;
  Variant variant = Variant::Strict;
};

const char* to_string(Relation r);
const char* to_string(Variant v);
Relation parse_relation(const std::string& s);
Variant parse_variant(const std::string& s);

struct RobustVerdict {
  bool robust = true;
  /// A feasible competitor defeating x*.
  std::optional<std::string> witness;
  /// Relation verdicts behind the witness.
  std::optional<RelationVerdict> forward;
  std::optional<RelationVerdict> backward;
};

/// Throws PreconditionError("NotRobustFeasible") for x* outside the feasible
/// set and ("NonExactPathRefused") when a union relation is only sampled.
RobustVerdict is_robust(const Instance& inst, const std::string& x_star, RobustKind kind);

struct GapVector {
  std::string decision;
  ExtReal gap;
  std::vector<ExtReal> feas;
  /// False when a pair value is only a sampled lower bound.
  bool exact = true;
};

/// Rows for every x != x* in decision order. which = 1..5. Differences of equal
/// infinities throw PreconditionError("IndeterminateGap").
std::vector<GapVector> gap_table(const Instance& inst, const std::string& x_star, int which);

struct RHatVerdict {
  bool meets = false;
  /// First decision whose row lies in C = {gap <= 0, feas <= 0}.
  std::optional<std::string> witness;
  std::vector<GapVector> table;
};

RHatVerdict r_hat_meets_C(const Instance& inst, const std::string& x_star, int which);

struct CharacterizationCheck {
  Relation target;
  int which;
  RobustVerdict robust;
  RHatVerdict r_hat;
  bool consistent;
};

/// Robustness for L, U, S against emptiness of R-hat 2, 4, 5 in C. Throws
/// InternalError("EquivalenceViolation") on disagreement.
CharacterizationCheck verify_characterization(const Instance& inst, const std::string& x_star, Relation target);

struct SufficiencyCheck {
  int which;
  /// R-hat does not meet C.
  bool premise;
  RobustVerdict robust;
  /// Robust although R-hat meets C: the criterion is not necessary.
  bool converse_failure;
};

/// which = 1 (L) or 3 (U). Throws InternalError("SufficiencyViolation") when the
/// premise holds but x* is not robust.
SufficiencyCheck verify_sufficiency(const Instance& inst, const std::string& x_star, int which);

enum class DualStatus { Confirmed, ProbeInconclusive, NotApplicable };

const char* to_string(DualStatus s);

struct DualProbeRow {
  Vector w;
  std::vector<GapVector> table;
  /// The first decision whose row lies in C' = {gap < 0, feas < 0}.
  std::optional<std::string> witness;
};

struct DualNecessaryReport {
  DualStatus status = DualStatus::NotApplicable;
  bool x_star_robust = false;
  std::vector<DualProbeRow> probes;
  /// A probe w with R-tilde disjoint from C'.
  std::optional<Vector> good_w;
};

/// Probes w over the generators of K*, with K_w the half-space of w and e_w = w.
/// target is L (inf-based gaps) or U (sup-based gaps). Throws
/// PreconditionError("NonConvexObjective") when some H(x, u) is a finite set of
/// more than one point.
DualNecessaryReport dual_necessary(const Instance& inst, const std::string& x_star, Relation target);

}  // namespace setopt::usop

#endif  // SETOPT_USOP_HPP
