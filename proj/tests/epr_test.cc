#include "eprdist/epr.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "eprdist/errors.h"
#include "gtest/gtest.h"
#include "test_support.h"

using namespace eprdist;
using eprdist::testing::random_bell_diagonal;
using eprdist::testing::random_densities;
using eprdist::testing::random_probs;

namespace {

void expect_weights_near(const BellDiagonal &actual, const BellDiagonal &expected, double tol) {
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(actual[i], expected[i], tol) << "weight " << i;
  }
}

}  // namespace

TEST(bell_diagonal, validation) {
  EXPECT_THROW(BellDiagonal(0.5, 0.5, 0.5, 0.0), ValidationError);
  EXPECT_THROW(BellDiagonal(1.2, -0.2, 0.0, 0.0), ValidationError);
  EXPECT_NO_THROW(BellDiagonal(0.25, 0.25, 0.25, 0.25));
  EXPECT_THROW(LinkGeometry(-1.0, 2.0), ValidationError);
}

TEST(transmit, examples) {
  expect_weights_near(transmit(PauliProbs(), PauliProbs()), BellDiagonal(1, 0, 0, 0), 0.0);
  expect_weights_near(transmit(PauliProbs(0, 1, 0, 0), PauliProbs()), BellDiagonal(0, 0, 1, 0), 0.0);
  expect_weights_near(transmit(PauliProbs(0, 0, 1, 0), PauliProbs()), BellDiagonal(0, 0, 0, 1), 0.0);
  expect_weights_near(transmit(PauliProbs(0, 0, 0, 1), PauliProbs()), BellDiagonal(0, 1, 0, 0), 0.0);
}

TEST(transmit, normalization_and_symmetry) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliProbs r = random_probs(rng);
    const PauliProbs s = random_probs(rng);
    const BellDiagonal rs = transmit(r, s);
    const BellDiagonal sr = transmit(s, r);
    EXPECT_NEAR(rs.a() + rs.b() + rs.c() + rs.d(), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(rs), concurrence(sr), 1e-15);
    EXPECT_NEAR(rs.a(), sr.a(), 1e-15);
  }
}

TEST(transmit_at_length, examples) {
  const ErrorDensities mu(0.01, 0.003, 0.02);
  expect_weights_near(transmit_at_length(mu, LinkGeometry(0, 0)), BellDiagonal(1, 0, 0, 0), 0.0);

  const double total = 17.0;
  const BellDiagonal ref = transmit_at_length(mu, LinkGeometry(total, 0));
  expect_weights_near(transmit_at_length(mu, LinkGeometry(0, total)), ref, 1e-12);
  expect_weights_near(transmit_at_length(mu, LinkGeometry(total / 2, total / 2)), ref, 1e-12);
}

TEST(transmit_at_length, equals_transmit_of_arms) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> length(0.0, 100.0);
  for (int trial = 0; trial < 300; ++trial) {
    const ErrorDensities mu = random_densities(rng);
    const LinkGeometry geom(length(rng), length(rng));
    expect_weights_near(transmit_at_length(mu, geom),
                        transmit(at_length(mu, geom.l1_km()), at_length(mu, geom.l2_km())), 1e-12);
  }
}

TEST(transmit_at_length, sufficiency_of_total_length) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> length(0.0, 150.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ErrorDensities mu = random_densities(rng);
    const double total = length(rng);
    const BellDiagonal ref = transmit(at_length(mu, total), at_length(mu, 0.0));
    for (int split = 0; split <= 10; ++split) {
      const double l1 = std::min(total, total * split / 10.0);
      const BellDiagonal state = transmit(at_length(mu, l1), at_length(mu, total - l1));
      expect_weights_near(state, ref, 1e-12);
    }
  }
}

TEST(transmit_at_length, psi_plus_dominates) {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> length(0.0, 1000.0);
  for (int trial = 0; trial < 500; ++trial) {
    const BellDiagonal w = transmit_at_length(random_densities(rng, 1e-4, 1.0),
                                              LinkGeometry(length(rng), length(rng)));
    EXPECT_GE(w.a(), std::max({w.b(), w.c(), w.d()}));
    EXPECT_EQ(dominant_bell_state(w), BellState::psi_plus);
  }
}

TEST(concurrence, examples) {
  EXPECT_EQ(concurrence(BellDiagonal(1, 0, 0, 0)), 1.0);
  EXPECT_EQ(concurrence(BellDiagonal(0.25, 0.25, 0.25, 0.25)), 0.0);
  EXPECT_EQ(concurrence(BellDiagonal(0.5, 0, 0.5, 0)), 0.0);
  EXPECT_DOUBLE_EQ(concurrence(BellDiagonal(0.1, 0.1, 0.1, 0.7)), 0.4);
}

TEST(concurrence, usefulness_criterion) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 1000; ++trial) {
    const BellDiagonal w = random_bell_diagonal(rng);
    const double largest = std::max({w.a(), w.b(), w.c(), w.d()});
    EXPECT_EQ(concurrence(w) > 0.0, largest > 0.5);
  }
}

TEST(dominant_bell_state, ties_pick_lowest_index) {
  EXPECT_EQ(dominant_bell_state(BellDiagonal(0.25, 0.25, 0.25, 0.25)), BellState::psi_plus);
  EXPECT_EQ(dominant_bell_state(BellDiagonal(0.0, 0.0, 0.5, 0.5)), BellState::phi_plus);
  EXPECT_EQ(dominant_bell_state(BellDiagonal(0.1, 0.4, 0.1, 0.4)), BellState::psi_minus);
}

TEST(fidelity_psi_plus, special_channels) {
  EXPECT_EQ(fidelity_psi_plus(BellDiagonal(1, 0, 0, 0)), 1.0);
  const double mu = 0.008;
  for (double length : {0.0, 1.0, 25.0, 400.0}) {
    const LinkGeometry geom(0.3 * length, 0.7 * length);
    EXPECT_NEAR(fidelity_psi_plus(transmit_at_length(ErrorDensities(mu, 0, 0), geom)),
                0.5 * (1.0 + std::exp(-2.0 * mu * length)), 1e-15);
    EXPECT_NEAR(bitflip_fidelity(mu, length), 0.5 * (1.0 + std::exp(-2.0 * mu * length)), 1e-15);
    EXPECT_NEAR(fidelity_psi_plus(transmit_at_length(ErrorDensities::depolarizing(mu), geom)),
                0.25 * (1.0 + 3.0 * std::exp(-4.0 * mu * length)), 1e-15);
  }
}

TEST(concurrence_vs_length, examples) {
  EXPECT_EQ(concurrence_vs_length(ErrorDensities(0.1, 0.2, 0.3), 0.0), 1.0);

  const double mu = 0.008;
  for (double length : {1.0, 100.0, 1e3, 1e4}) {
    const double c = concurrence_vs_length(ErrorDensities(mu, 0, 0), length);
    EXPECT_GT(c, 0.0);
    EXPECT_NEAR(c / std::exp(-2.0 * mu * length), 1.0, 1e-12);
    EXPECT_NEAR(bitflip_concurrence(mu, length) / c, 1.0, 1e-12);
  }
  for (double length : {1.0, 10.0, 34.0, 35.0, 100.0}) {
    EXPECT_NEAR(concurrence_vs_length(ErrorDensities::depolarizing(mu), length),
                std::max(0.0, 0.5 * (3.0 * std::exp(-4.0 * mu * length) - 1.0)), 1e-15);
    EXPECT_NEAR(depolarizing_concurrence(mu, length),
                concurrence_vs_length(ErrorDensities::depolarizing(mu), length), 1e-15);
  }
  EXPECT_THROW(concurrence_vs_length(ErrorDensities(), -2.0), ValidationError);
}

TEST(concurrence_vs_length, agrees_with_bell_weights) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> length(0.0, 300.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const ErrorDensities mu = random_densities(rng);
    const double total = length(rng);
    const double direct = concurrence_vs_length(mu, total);
    EXPECT_NEAR(direct, concurrence(transmit_at_length(mu, LinkGeometry(total, 0))), 1e-15);
    const double e12 = std::exp(-2.0 * (mu.mu1() + mu.mu2()) * total);
    const double e13 = std::exp(-2.0 * (mu.mu1() + mu.mu3()) * total);
    const double e23 = std::exp(-2.0 * (mu.mu2() + mu.mu3()) * total);
    EXPECT_NEAR(direct, std::max(0.0, 0.5 * (e12 + e13 + e23 - 1.0)), 1e-15);
  }
}

TEST(concurrence_vs_length, non_increasing) {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 50; ++trial) {
    const ErrorDensities mu = random_densities(rng);
    double previous = 1.0;
    for (int i = 0; i <= 400; ++i) {
      const double c = concurrence_vs_length(mu, i * 0.5);
      EXPECT_LE(c, previous);
      previous = c;
    }
  }
}

TEST(doubleflip, coefficients) {
  const double mu = 0.008;
  expect_weights_near(doubleflip_coefficients(mu, 0.0), BellDiagonal(1, 0, 0, 0), 0.0);
  for (double length : {2.0, 30.0, 55.0, 80.0}) {
    expect_weights_near(doubleflip_coefficients(mu, length),
                        transmit_at_length(ErrorDensities(mu, mu, 0), LinkGeometry(length, 0)),
                        1e-15);
    const double x = std::exp(-2.0 * mu * length);
    EXPECT_NEAR(concurrence(doubleflip_coefficients(mu, length)),
                0.5 * std::max(0.0, x * x + 2.0 * x - 1.0), 1e-15);
    EXPECT_NEAR(doubleflip_concurrence(mu, length),
                concurrence_vs_length(ErrorDensities(mu, mu, 0), length), 1e-15);
  }
}

TEST(depolarizing, coefficients) {
  const double mu = 0.01;
  for (double length : {0.0, 5.0, 27.0, 90.0}) {
    expect_weights_near(depolarizing_coefficients(mu, length),
                        transmit_at_length(ErrorDensities::depolarizing(mu), LinkGeometry(length, 0)),
                        1e-15);
  }
}
