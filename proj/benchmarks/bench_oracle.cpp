#include <benchmark/benchmark.h>

#include "lgc/instances.hpp"
#include "lgc/oracle.hpp"

using namespace lgc;

static void BM_PartitionEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PartitionIterator it(n);
    std::uint64_t count = 1;
    while (it.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(8)->Arg(10)->Arg(11);

static void BM_ExactMinMaxDisagreements(benchmark::State& state) {
  SignedGraph g = random_signed(static_cast<int>(state.range(0)), 0.5, 4, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_min_local_disagreements(g, Aggregate::max));
}
BENCHMARK(BM_ExactMinMaxDisagreements)->Arg(7)->Arg(9);

static void BM_ExactMaxMinAgreements(benchmark::State& state) {
  SignedGraph g = random_signed(static_cast<int>(state.range(0)), 0.5, 4, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_max_min_agreements(g));
}
BENCHMARK(BM_ExactMaxMinAgreements)->Arg(7)->Arg(9);

BENCHMARK_MAIN();
