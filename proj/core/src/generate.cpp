#include "setopt/generate.hpp"

#include <string>

namespace setopt::gen {

namespace {

ConeSample from_generators(std::vector<Vector> gens) {
  PolyhedralCone k = cone_from_generators(gens);
  Vector sum(gens.front().dim());
  for (const auto& g : gens) sum += g;
  Vector tilted = sum + gens.front();
  return {std::move(k), gens, {sum, tilted, gens.front()}};
}

std::vector<Vector> unit_vectors(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Vector::unit(dim, i));
  return out;
}

}  // namespace

ConeSample orthant(std::size_t dim) {
  auto gens = unit_vectors(dim);
  Vector ones(dim);
  for (std::size_t i = 0; i < dim; ++i) ones[i] = 1;
  Vector tilted = ones + gens.front();
  return {cone_orthant(dim), gens, {ones, tilted, gens.front()}};
}

ConeSample wedge(std::size_t dim) {
  if (dim == 2) return from_generators({Vector{1, 0}, Vector{1, 2}});
  if (dim == 3) return from_generators({Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{1, 1, 2}});
  throw PreconditionError("DimensionCapExceeded", "wedge cones exist for dimensions 2 and 3");
}

int Generator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Generator::coin() { return uniform(0, 1) == 1; }

Rational Generator::coord(int lo, int hi, int den) { return Rational(uniform(lo * den, hi * den), den); }

Vector Generator::point(std::size_t dim, int lo, int hi) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = coord(lo, hi);
  return v;
}

VSet Generator::polytope(std::size_t dim, std::size_t n, const Vector& center, int radius) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(center + point(dim, -radius, radius));
  return VSet::polyhedron(std::move(pts));
}

VSet Generator::polytope(std::size_t dim, std::size_t n) { return polytope(dim, n, point(dim)); }

Vector Generator::cone_point(const ConeSample& k, int max_weight) {
  Vector v(k.cone.dim());
  for (const auto& g : k.generators) v += g * coord(0, max_weight);
  return v;
}

VSet Generator::above(const VSet& p, const ConeSample& k) {
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + cone_point(k));
  if (coin()) pts.push_back(p.vertices().front() + cone_point(k));
  return VSet::polyhedron(std::move(pts));
}

VSet Generator::below(const VSet& p, const ConeSample& k) {
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v - cone_point(k));
  if (coin()) pts.push_back(p.vertices().front() - cone_point(k));
  return VSet::polyhedron(std::move(pts));
}

SetFamily Generator::family(std::size_t dim, std::size_t n, const char* prefix) {
  std::vector<FamilyMember> ms;
  for (std::size_t i = 0; i < n; ++i) {
    ms.push_back({std::string(prefix) + std::to_string(i), polytope(dim, static_cast<std::size_t>(uniform(1, 4)))});
  }
  return SetFamily(std::move(ms));
}

usop::Instance Generator::usop_instance(std::size_t max_x, std::size_t max_u) {
  const auto nx = static_cast<std::size_t>(uniform(2, static_cast<int>(max_x)));
  const auto nu = static_cast<std::size_t>(uniform(1, static_cast<int>(max_u)));
  const ConeSample k = orthant(2);
  std::vector<std::string> xs;
  std::vector<std::string> us;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < nu; ++i) us.push_back("u" + std::to_string(i));

  usop::SetTable h;
  for (std::size_t x = 0; x < nx; ++x) {
    std::vector<VSet> row;
    const int mode = x == 0 ? 0 : uniform(0, 2);
    const std::size_t base = x == 0 ? 0 : static_cast<std::size_t>(uniform(0, static_cast<int>(x) - 1));
    for (std::size_t u = 0; u < nu; ++u) {
      if (mode == 0) {
        row.push_back(polytope(2, static_cast<std::size_t>(uniform(1, 4)), point(2, -2, 2), 1));
        continue;
      }
      const VSet& ref = h[base][static_cast<std::size_t>(uniform(0, static_cast<int>(nu) - 1))];
      row.push_back(mode == 1 ? above(ref, k) : below(ref, k));
    }
    h.push_back(std::move(row));
  }

  // x0 is always feasible; others are infeasible with probability 1/4.
  usop::SetTable f1;
  usop::SetTable f2;
  for (std::size_t x = 0; x < nx; ++x) {
    const bool feasible = x == 0 || uniform(0, 3) != 0;
    const bool break_first = coin();
    std::vector<VSet> r1;
    std::vector<VSet> r2;
    for (std::size_t u = 0; u < nu; ++u) {
      Rational hi = coord(-2, 0);
      if (!feasible && break_first && u == 0) hi = coord(0, 1) + Rational(1, 4);
      r1.push_back(VSet::polyhedron({Vector{hi - coord(0, 2)}, Vector{hi}}));
      Vector top{coord(-2, 0), coord(-2, 0)};
      if (!feasible && !break_first && u == 0) top[1] = coord(0, 1) + Rational(1, 4);
      r2.push_back(VSet::polyhedron({top, top - cone_point(k), top - cone_point(k)}));
    }
    f1.push_back(std::move(r1));
    f2.push_back(std::move(r2));
  }
  std::vector<usop::ConstraintBlock> cons;
  cons.push_back({cone_orthant(1), Vector{1}, std::move(f1)});
  cons.push_back({cone_orthant(2), Vector{1, 1}, std::move(f2)});
  return usop::Instance(std::move(xs), std::move(us), {k.cone, Vector{1, 1}, std::move(h)}, std::move(cons));
}

}  // namespace setopt::gen
