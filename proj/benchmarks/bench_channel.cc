#include <benchmark/benchmark.h>

#include "eprdist/analysis.h"
#include "eprdist/channel.h"
#include "eprdist/epr.h"

using namespace eprdist;

static void BM_Iterate(benchmark::State &state) {
  const PauliProbs p(0.9, 0.05, 0.03, 0.02);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(p, n));
  }
}
BENCHMARK(BM_Iterate)->Arg(10)->Arg(1000);

static void BM_IterateBruteforce(benchmark::State &state) {
  const PauliProbs p(0.9, 0.05, 0.03, 0.02);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_bruteforce(p, n));
  }
}
BENCHMARK(BM_IterateBruteforce)->Arg(10)->Arg(1000);

static void BM_TransmitAtLength(benchmark::State &state) {
  const ErrorDensities mu(0.008, 0.004, 0.012);
  const LinkGeometry geom(5.0, 7.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transmit_at_length(mu, geom));
  }
}
BENCHMARK(BM_TransmitAtLength);

static void BM_ThresholdGeneric(benchmark::State &state) {
  const ErrorDensities mu(0.008, 0.004, 0.012);
  for (auto _ : state) {
    benchmark::DoNotOptimize(threshold_generic(mu));
  }
}
BENCHMARK(BM_ThresholdGeneric);

static void BM_Sweep(benchmark::State &state) {
  const ErrorDensities mu = ErrorDensities::depolarizing(8e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(mu, 80.0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Sweep)->Arg(100)->Arg(10000);

BENCHMARK_MAIN();
