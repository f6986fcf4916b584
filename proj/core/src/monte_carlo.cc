#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "eprdist/errors.h"
#include "eprdist/oracle.h"

namespace eprdist {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Probability -> threshold on a uniform 64-bit draw.
std::uint64_t to_threshold(double probability) {
  const double scaled = std::ldexp(probability, 64);
  if (scaled >= 18446744073709551615.0) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(scaled);
}

struct ArmSampler {
  std::uint64_t segments = 0;
  // Cumulative thresholds for X, X+Y, X+Y+Z.
  std::array<std::uint64_t, 3> cumulative{};

  ArmSampler(const ErrorDensities &mu, double length_km, std::uint64_t segments_per_km) {
    if (length_km == 0.0) {
      return;
    }
    const double exact = length_km * static_cast<double>(segments_per_km);
    segments = static_cast<std::uint64_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
    segments = std::max<std::uint64_t>(segments, 1);
    const double delta = length_km / static_cast<double>(segments);
    cumulative = {to_threshold(mu.mu1() * delta), to_threshold((mu.mu1() + mu.mu2()) * delta),
                  to_threshold(mu.total() * delta)};
  }

  unsigned walk(KeyedRng &rng) const {
    unsigned net = 0;
    for (std::uint64_t i = 0; i < segments; ++i) {
      const std::uint64_t x = rng.next();
      if (x < cumulative[2]) {
        net ^= x < cumulative[0] ? 1U : (x < cumulative[1] ? 2U : 3U);
      }
    }
    return net;
  }
};

}  // namespace

KeyedRng::KeyedRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL))) {}

std::uint64_t KeyedRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

McEstimate monte_carlo_transmit(const ErrorDensities &mu, const LinkGeometry &geom,
                                std::uint64_t segments_per_km, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads) {
  if (segments_per_km < 1) {
    throw ValidationError("segments_per_km must be at least 1");
  }
  if (samples < 1) {
    throw ValidationError("samples must be at least 1");
  }
  const double delta = 1.0 / static_cast<double>(segments_per_km);
  if (mu.total() * delta > 1.0) {
    throw ValidationError(
        "per-segment error probability exceeds 1; increase segments_per_km to at least " +
        std::to_string(static_cast<std::uint64_t>(std::ceil(mu.total()))));
  }

  const ArmSampler first(mu, geom.l1_km(), segments_per_km);
  const ArmSampler second(mu, geom.l2_km(), segments_per_km);

  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, samples));

  std::vector<std::array<std::uint64_t, 4>> partial(threads);
  auto run = [&](unsigned worker) {
    const std::uint64_t begin = samples * worker / threads;
    const std::uint64_t end = samples * (worker + 1) / threads;
    auto &tally = partial[worker];
    for (std::uint64_t n = begin; n < end; ++n) {
      KeyedRng rng(seed, n);
      const unsigned k = first.walk(rng);
      const unsigned l = second.walk(rng);
      ++tally[static_cast<std::size_t>(bell_outcome(k, l))];
    }
  };

  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(run, w);
    }
    for (auto &t : pool) {
      t.join();
    }
  }

  McEstimate estimate;
  estimate.samples = samples;
  for (const auto &tally : partial) {
    for (std::size_t i = 0; i < 4; ++i) {
      estimate.counts[i] += tally[i];
    }
  }
  std::array<double, 4> freq{};
  const auto total = static_cast<double>(samples);
  for (std::size_t i = 0; i < 4; ++i) {
    freq[i] = static_cast<double>(estimate.counts[i]) / total;
    estimate.standard_errors[i] = std::sqrt(freq[i] * (1.0 - freq[i]) / total);
  }
  estimate.bell_diagonal = BellDiagonal(freq);
  return estimate;
}

}  // namespace eprdist
