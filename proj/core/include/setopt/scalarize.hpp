#ifndef SETOPT_SCALARIZE_HPP
#define SETOPT_SCALARIZE_HPP

#include <optional>
#include <vector>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"
#include "setopt/sets.hpp"

namespace setopt {

enum class Exactness { Exact, SampledLowerBound };

const char* to_string(Exactness x);

/// Value of a sup-inf functional with the points where it is attained.
struct ScalarizationReport {
  ExtReal value;
  std::optional<Vector> attained_outer;
  std::optional<Vector> attained_inner;
  Exactness exactness = Exactness::Exact;
  /// LP ray (in the inner program's variables) certifying an inner -inf.
  std::optional<Vector> inner_ray;
  /// Outer recession direction along which the value grows without bound.
  std::optional<Vector> outer_ray;
  /// False when one of the arguments has P + K = Y.
  bool k_proper = true;
};

/// Closed form of z^{e,K}(y) = inf{t : y in te - K}. `e` must lie in K \ {0};
/// throws PreconditionError("DirectionNotInCone") otherwise.
ExtReal z_value(const PolyhedralCone& k, const Vector& e, const Vector& y);

/// The same infimum for an arbitrary nonzero e (no cone check). Used for the
/// wrong-cone demonstrations where e lies in K but the functional uses -K.
ExtReal z_value_any(const PolyhedralCone& k, const Vector& e, const Vector& y);

struct InnerValue {
  ExtReal value;
  std::optional<Vector> argmin;
  /// Improving LP ray when the value is -inf.
  std::optional<Vector> ray;
};

/// inf over p in P of z^{e,K}(p - q).
InnerValue inner_inf(const PolyhedralCone& k, const Vector& e, const VSet& p, const Vector& q);

/// sup_{q in Q} inf_{p in P} z^{e,K}(p - q).
ScalarizationReport z1_pair(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q);
/// sup_{x in P} inf_{y in Q} z^{e,K}(x - y).
ScalarizationReport z2_pair(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q);

/// z1_pair / z2_pair without the e in K check.
ScalarizationReport z1_pair_any(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q);
ScalarizationReport z2_pair_any(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q);

/// inf over P of z^{e,K}.
ScalarizationReport script_z1(const PolyhedralCone& k, const Vector& e, const VSet& p);
/// sup over P of z^{e,K}.
ScalarizationReport script_z2(const PolyhedralCone& k, const Vector& e, const VSet& p);

/// G_e(A, B) = sup_{b in B} phi_{e,A}(b) for e_neg in -int(K). Computed as
/// Z1^{-e,K}(A, B) and cross-checked against Z2^{e,-K}(B, A).
/// Throws PreconditionError("DirectionNotNegativeInterior").
ScalarizationReport g_e(const Vector& e_neg, const PolyhedralCone& k, const VSet& a, const VSet& b);

struct ImpropernessReport {
  struct Sample {
    Vector y;
    ExtReal value;
    /// -inf exactly when -y lies in K (for a symmetric cone: y in K).
    bool predicted_neg_inf;
  };
  std::vector<Sample> samples;
  /// Every value is infinite and matches its prediction.
  bool consistent = true;
};

/// z^{e,K} on a non-pointed K with e in its lineality space. Throws
/// PreconditionError("ConePointed") for pointed K and
/// ("DirectionNotInLineality") unless e in K and -e in K, e != 0.
ImpropernessReport improperness_demo(const PolyhedralCone& k, const Vector& e, const std::vector<Vector>& samples);

struct IntersectionLemmaReport {
  struct Probe {
    Vector y;
    bool in_p_plus_k = false;
    /// y in P + K - alpha e for every listed alpha.
    bool in_every_shift = true;
    /// For y outside P + K: an alpha with y outside P + K - alpha e.
    std::optional<Rational> excluding_alpha;
    bool search_exhausted = false;
  };
  std::vector<Probe> probes;
  /// Members stay inside every shift and every outside probe got excluded.
  bool holds = true;
};

/// P + K = intersection over alpha > 0 of (P + K - alpha e), checked on probes.
/// The mirrored identity Q - K = intersection of (Q - K + alpha e) is the same
/// call with K negated and e replaced by -e.
IntersectionLemmaReport check_intersection_lemma(const VSet& p, const PolyhedralCone& k, const Vector& e,
                                                 const std::vector<Rational>& alphas,
                                                 const std::vector<Vector>& probes);

}  // namespace setopt

#endif  // SETOPT_SCALARIZE_HPP
