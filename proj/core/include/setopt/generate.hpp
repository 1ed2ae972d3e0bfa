#ifndef SETOPT_GENERATE_HPP
#define SETOPT_GENERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "setopt/cones.hpp"
#include "setopt/numeric.hpp"
#include "setopt/sets.hpp"
#include "setopt/usop.hpp"

// Seeded random instances with small rational coordinates.

namespace setopt::gen {

/// A pointed cone together with a few of its members, used to plant relations.
struct ConeSample {
  PolyhedralCone cone;
  std::vector<Vector> generators;
  /// Reference directions: two interior ones, then a boundary generator.
  std::vector<Vector> directions;
};

ConeSample orthant(std::size_t dim);
/// cone((1,0), (1,2)) in the plane, cone((1,0,0), (0,1,0), (1,1,2)) in space.
ConeSample wedge(std::size_t dim);

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  bool coin();
  /// A multiple of 1/den in [lo, hi].
  Rational coord(int lo, int hi, int den = 4);
  Vector point(std::size_t dim, int lo = -3, int hi = 3);
  /// Bounded polyhedron from `n` random points around `center`.
  VSet polytope(std::size_t dim, std::size_t n, const Vector& center, int radius = 2);
  VSet polytope(std::size_t dim, std::size_t n);
  /// A nonnegative combination of the generators.
  Vector cone_point(const ConeSample& k, int max_weight = 2);
  /// conv of points of P moved by cone points: every point lies in P + K.
  VSet above(const VSet& p, const ConeSample& k);
  /// conv of points of P moved by negated cone points: inside P - K.
  VSet below(const VSet& p, const ConeSample& k);
  /// A family of polytopes labelled g0, g1, ...
  SetFamily family(std::size_t dim, std::size_t n, const char* prefix);

  /// Small planar instance: up to `max_x` decisions, `max_u` scenarios, one
  /// scalar constraint and one planar constraint with orthant cones.
  usop::Instance usop_instance(std::size_t max_x, std::size_t max_u);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace setopt::gen

#endif  // SETOPT_GENERATE_HPP
