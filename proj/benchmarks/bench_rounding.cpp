#include <benchmark/benchmark.h>

#include "lgc/agreements.hpp"
#include "lgc/ballround.hpp"
#include "lgc/instances.hpp"
#include "lgc/minmax.hpp"
#include "lgc/relaxation.hpp"

using namespace lgc;

static void BM_GreedyClusteringComplete(benchmark::State& state) {
  SignedGraph g = complete_random(static_cast<int>(state.range(0)), 5);
  MetricSolution metric = *solve_disagreement_metric(g, Aggregate::max);
  for (auto _ : state)
    benchmark::DoNotOptimize(greedy_clustering_complete(metric));
}
BENCHMARK(BM_GreedyClusteringComplete)->Arg(6)->Arg(8)->Arg(10);

static void BM_LayeredClustering(benchmark::State& state) {
  SignedGraph g = random_signed(static_cast<int>(state.range(0)), 0.5, 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(layered_clustering(g, 4.0));
}
BENCHMARK(BM_LayeredClustering)->Arg(8)->Arg(10)->Arg(12);

static void BM_SolveMinMax(benchmark::State& state) {
  SignedGraph g = random_signed(8, 0.5, 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(solve_minmax(g));
}
BENCHMARK(BM_SolveMinMax);

static void BM_LocalSearch(benchmark::State& state) {
  SignedGraph g = random_signed(static_cast<int>(state.range(0)), 0.5, 4, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_maxmin_agreements(g, 0.5));
}
BENCHMARK(BM_LocalSearch)->Arg(16)->Arg(64)->Arg(256);
