#include <benchmark/benchmark.h>

#include "lgc/instances.hpp"
#include "lgc/relaxation.hpp"

using namespace lgc;

static void BM_BuildDisagreementLp(benchmark::State& state) {
  SignedGraph g = gap_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_disagreement_lp(g, Aggregate::max));
}
BENCHMARK(BM_BuildDisagreementLp)->Arg(8)->Arg(16)->Arg(24);

static void BM_SolveDisagreementLp(benchmark::State& state) {
  SignedGraph g = gap_cycle(static_cast<int>(state.range(0)));
  LinearProgram lp = build_disagreement_lp(g, Aggregate::max);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveDisagreementLp)->Arg(8)->Arg(12)->Arg(16);

static void BM_SolveAgreementsLp(benchmark::State& state) {
  SignedGraph g = gap_cycle(static_cast<int>(state.range(0)));
  LinearProgram lp = build_agreements_lp(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveAgreementsLp)->Arg(8)->Arg(12)->Arg(16);

static void BM_SolveRandomLp(benchmark::State& state) {
  SignedGraph g = random_signed(static_cast<int>(state.range(0)), 0.5, 4, 7);
  LinearProgram lp = build_disagreement_lp(g, Aggregate::max);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveRandomLp)->Arg(8)->Arg(10)->Arg(12);
