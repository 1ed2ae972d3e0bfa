#ifndef SETOPT_ORACLE_HPP
#define SETOPT_ORACLE_HPP

#include <vector>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"
#include "setopt/sets.hpp"

// Brute-force oracles built on cone membership, pointwise z evaluation and
// sampling. Only outer_sampled touches the LP-based inner infimum.

namespace setopt::oracle {

struct BisectionResult {
  enum class Kind { Interval, PosInf, NegInf };
  Kind kind = Kind::Interval;
  /// z lies in [lo, hi] when kind == Interval.
  Rational lo;
  Rational hi;

  bool brackets(const ExtReal& v) const;
};

/// Locates inf{t : te - y in K} by bracketing and bisection on the membership
/// predicate. Bounds beyond 2^60 in magnitude are reported as infinities.
BisectionResult z_bisection(const PolyhedralCone& k, const Vector& e, const Vector& y, Rational lo, Rational hi,
                            int iters);

struct SampleCloud {
  VSet source;
  std::vector<Vector> points;
  int density = 0;
  Rational ray_truncation;
};

/// Vertices plus a barycentric rational grid of conv(vertices) (planar sets are
/// fan-triangulated first) plus every vertex moved along every ray by tau/2 and
/// tau. Every sample is checked for exact membership.
SampleCloud sample_set(const VSet& p, int density, const Rational& ray_truncation = 1);

enum class PairKind { Z1, Z2 };

struct SampledPair {
  /// Both sides replaced by their sample clouds.
  ExtReal both_sampled;
  /// Sup side sampled, inf side solved exactly per sample: a lower bound of the
  /// exact value.
  ExtReal outer_sampled;
};

SampledPair zpair_sampled(const PolyhedralCone& k, const Vector& e, const VSet& p, const VSet& q, int density,
                          PairKind kind);

}  // namespace setopt::oracle

#endif  // SETOPT_ORACLE_HPP
