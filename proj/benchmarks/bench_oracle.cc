#include <benchmark/benchmark.h>

#include "eprdist/oracle.h"

using namespace eprdist;

static void BM_ApplyTwoSided(benchmark::State &state) {
  const PauliProbs r(0.9, 0.05, 0.03, 0.02);
  const PauliProbs s(0.8, 0.1, 0.05, 0.05);
  const DensityMatrix4 rho = bell_state(BellState::psi_plus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_two_sided(r, s, rho));
  }
}
BENCHMARK(BM_ApplyTwoSided);

static void BM_WoottersConcurrence(benchmark::State &state) {
  const DensityMatrix4 rho = apply_two_sided(PauliProbs(0.9, 0.05, 0.03, 0.02),
                                             PauliProbs(0.8, 0.1, 0.05, 0.05),
                                             bell_state(BellState::psi_plus));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wootters_concurrence(rho));
  }
}
BENCHMARK(BM_WoottersConcurrence);

static void BM_MonteCarlo(benchmark::State &state) {
  const ErrorDensities mu = ErrorDensities::depolarizing(8e-3);
  const LinkGeometry geom(5.0, 5.0);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_transmit(mu, geom, 100, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Unit(benchmark::kMillisecond);
