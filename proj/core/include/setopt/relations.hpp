#ifndef SETOPT_RELATIONS_HPP
#define SETOPT_RELATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"
#include "setopt/scalarize.hpp"
#include "setopt/sets.hpp"

namespace setopt {

enum class RelationExactness { Exact, SampledNegative };

const char* to_string(RelationExactness x);

struct RelationWitness {
  std::optional<std::string> left_label;
  std::optional<std::string> right_label;
  /// A point violating the defining containment.
  std::optional<Vector> point;
  /// (gamma, lambda) pairs found for the quantified clauses, in family order.
  std::vector<std::pair<std::string, std::string>> assignment;
};

struct RelationVerdict {
  bool holds = true;
  RelationWitness witness;
  RelationExactness exactness = RelationExactness::Exact;
  std::string note;

  bool exact() const noexcept { return exactness == RelationExactness::Exact; }
};

/// P <=^l_K Q, i.e. Q in P + K. Supported: Q finite (any P), or both
/// polyhedra, or P a single point. Otherwise PreconditionError("UnsupportedCombination").
RelationVerdict leq_l(const PolyhedralCone& k, const VSet& p, const VSet& q);
/// P <=^u_K Q, i.e. P in Q - K.
RelationVerdict leq_u(const PolyhedralCone& k, const VSet& p, const VSet& q);
RelationVerdict leq_s(const PolyhedralCone& k, const VSet& p, const VSet& q);

/// For every lambda some gamma has F_gamma <=^l G_lambda.
RelationVerdict leq_L(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g);
/// For every gamma some lambda has F_gamma <=^u G_lambda.
RelationVerdict leq_U(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g);
RelationVerdict leq_S(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g);

/// The lowercase relations between the unions of two families. Exact when the
/// covered members are finite, a single covering member suffices, a vertex
/// already violates, or the covering union is certified convex (planar). Else a
/// rational grid of the covered members is tested: a violation found is exact,
/// its absence is reported as SampledNegative.
RelationVerdict union_leq_l(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g, int density = 16);
RelationVerdict union_leq_u(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g, int density = 16);
RelationVerdict union_leq_s(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g, int density = 16);

struct ImplicationReport {
  RelationVerdict family;  // L, U or S
  RelationVerdict unions;  // l, u or s on the unions
  /// The lowercase relation holds while the family relation does not.
  bool strict = false;
};

/// Throws InternalError("ImplicationViolation") when the family relation holds
/// and the exact union verdict is false.
ImplicationReport check_L_implies_l(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g);
ImplicationReport check_U_implies_u(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g);
ImplicationReport check_S_implies_s(const PolyhedralCone& k, const SetFamily& f, const SetFamily& g);

struct CharacterizationReport {
  /// sup_lambda inf_gamma Z1 (L), sup_gamma inf_lambda Z2 (U). For S both.
  ExtReal value;
  std::optional<ExtReal> second_value;
  Exactness exactness = Exactness::Exact;
  RelationVerdict verdict;
  /// (value <= 0) agrees with the verdict.
  bool consistent = true;
};

/// Throws InternalError("EquivalenceViolation") when exact values disagree with
/// the direct verdict.
CharacterizationReport scalarization_characterize_L(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                                    const SetFamily& g);
CharacterizationReport scalarization_characterize_U(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                                    const SetFamily& g);
CharacterizationReport scalarization_characterize_S(const PolyhedralCone& k, const Vector& e1, const Vector& e2,
                                                    const SetFamily& f, const SetFamily& g);

struct MonotonicityReport {
  RelationVerdict verdict;
  /// inf_gamma of inf over F_gamma of z (L) or sup_gamma of sup over F_gamma (U).
  ExtReal left;
  ExtReal right;
  /// left <= right was asserted (the relation held).
  bool asserted = false;
};

/// Throws InternalError("MonotonicityViolation").
MonotonicityReport scalar_monotonicity_L(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                         const SetFamily& g);
MonotonicityReport scalar_monotonicity_U(const PolyhedralCone& k, const Vector& e, const SetFamily& f,
                                         const SetFamily& g);

enum class DualKind { U, L };

struct DualProbe {
  Vector w;
  /// Scalar values on the K_w scale with e_w = w: sup over P and sup over Q of
  /// the functional for u, inf over P and Q for l.
  ExtReal left;
  ExtReal right;
  bool premise = false;
};

struct DualSufficiencyReport {
  std::vector<DualProbe> probes;
  /// The inequality holds on every listed probe.
  bool probe_premise = false;
  /// The inequality holds for every w in K*, decided by LP.
  bool exact_premise = false;
  /// A w in K* breaking the inequality when the exact premise fails.
  std::optional<Vector> breaking_w;
  RelationVerdict verdict;
};

/// Half-space scalarizations. For u the premise is sup_P <w,.> <= sup_Q <w,.>
/// per w, for l it is inf_P <w,.> <= inf_Q <w,.>. Probing only the generators
/// of K* is not enough, which is why the exact premise is reported separately.
/// Throws PreconditionError("ProbeNotInDualCone") and, when the exact premise
/// holds but the relation fails, InternalError("DualSufficiency").
DualSufficiencyReport dual_sufficiency_check(const PolyhedralCone& k, const VSet& p, const VSet& q,
                                             const std::vector<Vector>& probes, DualKind kind);

}  // namespace setopt

#endif  // SETOPT_RELATIONS_HPP
