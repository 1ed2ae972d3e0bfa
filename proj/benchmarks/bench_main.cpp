#include <benchmark/benchmark.h>

#include "setopt/generate.hpp"
#include "setopt/lp.hpp"
#include "setopt/papersuite.hpp"
#include "setopt/relations.hpp"
#include "setopt/scalarize.hpp"
#include "setopt/usop.hpp"

using namespace setopt;

static void BM_ZClosedForm(benchmark::State& state) {
  const auto k = gen::wedge(3);
  const Vector y{3, -1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(z_value(k.cone, k.directions[0], y));
}
BENCHMARK(BM_ZClosedForm);

static void BM_Z1Pair(benchmark::State& state) {
  gen::Generator g(1);
  const auto k = gen::orthant(static_cast<std::size_t>(state.range(0)));
  const VSet p = g.polytope(k.cone.dim(), 4);
  const VSet q = g.polytope(k.cone.dim(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(z1_pair(k.cone, k.directions[0], p, q));
}
BENCHMARK(BM_Z1Pair)->Arg(2)->Arg(3);

static void BM_LeqL(benchmark::State& state) {
  gen::Generator g(2);
  const auto k = gen::orthant(2);
  const VSet p = g.polytope(2, 5);
  const VSet q = g.above(p, k);
  for (auto _ : state) benchmark::DoNotOptimize(leq_l(k.cone, p, q));
}
BENCHMARK(BM_LeqL);

static void BM_UnionEquals(benchmark::State& state) {
  const auto a = papersuite::l_example_left();
  const auto b = papersuite::l_example_right();
  for (auto _ : state) benchmark::DoNotOptimize(union_equals_2d(a, b));
}
BENCHMARK(BM_UnionEquals);

static void BM_UsopCharacterization(benchmark::State& state) {
  gen::Generator g(3);
  const usop::Instance inst = g.usop_instance(6, 4);
  const auto feas = usop::robust_feasible_set(inst);
  for (auto _ : state) {
    for (const auto& x : feas) benchmark::DoNotOptimize(usop::verify_characterization(inst, x, usop::Relation::S));
  }
}
BENCHMARK(BM_UsopCharacterization);

static void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  lp::LinearProgram prog(n);
  Vector c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = -Rational(static_cast<long>(j + 1));
  prog.set_objective(c);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = -Rational(static_cast<long>((i + j) % n + 1));
    prog.add_constraint(row, lp::Relation::GreaterEq, -Rational(static_cast<long>(10 * n)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(prog));
}
BENCHMARK(BM_Simplex)->Arg(4)->Arg(8)->Arg(16);

static void BM_PaperSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(papersuite::run_all());
}
BENCHMARK(BM_PaperSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
