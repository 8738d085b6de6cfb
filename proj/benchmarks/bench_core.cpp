#include <benchmark/benchmark.h>

#include "pdcover/applications.hpp"
#include "pdcover/baseline.hpp"
#include "pdcover/generator.hpp"
#include "pdcover/solver.hpp"
#include "pdcover/witness.hpp"

namespace {

using namespace pdcover;

ExplicitInstance make_instance(std::uint64_t seed, int n, int m) {
  Rng rng(seed);
  ExplicitGenParams params;
  params.n_min = params.n_max = n;
  params.m_max = m;
  for (int attempt = 0;; ++attempt) {
    auto inst = generate_explicit_instance(rng, params, FamilyKind::kPliable);
    if (inst) return *inst;
    if (attempt > 100) throw Error("bench instance generation failed");
  }
}

void BM_solve_explicit(benchmark::State& state) {
  const auto inst = make_instance(1, static_cast<int>(state.range(0)), 14);
  const ExplicitFamilyOracle oracle(inst.fam, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst.g, oracle));
  }
}
BENCHMARK(BM_solve_explicit)->Arg(6)->Arg(8);

void BM_min_cores_enumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph base(n);
  for (int v = 0; v < n; ++v) base.add_edge(v, (v + 1) % n, Rational(0));
  const NearMinCutsOracle oracle(base, 2);
  Graph cand(n);
  for (int v = 0; v + 2 < n; v += 2) cand.add_edge(v, v + 2, Rational(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.min_cores(EdgeSet(), cand));
  }
}
BENCHMARK(BM_min_cores_enumeration)->Arg(8)->Arg(12)->Arg(16);

void BM_optimal_cover(benchmark::State& state) {
  const auto inst = make_instance(2, 7, static_cast<int>(state.range(0)));
  const ExplicitFamilyOracle oracle(inst.fam, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_cover(inst.g, oracle));
  }
}
BENCHMARK(BM_optimal_cover)->Arg(10)->Arg(14);

void BM_witness_forest(benchmark::State& state) {
  const auto inst = make_instance(3, 8, 14);
  const ExplicitFamilyOracle oracle(inst.fam, true);
  const SolveResult r = solve(inst.g, oracle);
  const auto order = r.solution_in_addition_order();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_witness_forest(inst.g, oracle, order));
  }
}
BENCHMARK(BM_witness_forest);

void BM_gamma_check_sampled(benchmark::State& state) {
  const auto inst = make_instance(4, 7, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_gamma(inst.fam, inst.g, GammaMode::kSampled, 200, 1));
  }
}
BENCHMARK(BM_gamma_check_sampled);

}  // namespace

BENCHMARK_MAIN();
