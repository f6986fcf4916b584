#pragma once

#include <array>
#include <cmath>
#include <random>

#include "eprdist/channel.h"
#include "eprdist/epr.h"
#include "eprdist/linalg.h"

namespace eprdist::testing {

/// Uniform draw from the probability simplex (flat Dirichlet).
template <std::size_t N>
std::array<double, N> random_simplex(std::mt19937_64 &rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, N> w{};
  double sum = 0.0;
  for (double &x : w) {
    x = expo(rng);
    sum += x;
  }
  for (double &x : w) {
    x /= sum;
  }
  return w;
}

inline PauliProbs random_probs(std::mt19937_64 &rng) { return PauliProbs(random_simplex<4>(rng)); }

inline BellDiagonal random_bell_diagonal(std::mt19937_64 &rng) {
  return BellDiagonal(random_simplex<4>(rng));
}

/// Densities log-uniform in [lo, hi] per km.
inline ErrorDensities random_densities(std::mt19937_64 &rng, double lo = 1e-3, double hi = 1e-1) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return {std::exp(u(rng)), std::exp(u(rng)), std::exp(u(rng))};
}

template <std::size_t N>
CMatrix<N> random_hermitian(std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < N; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Random full-rank density matrix G G^dagger / tr.
template <std::size_t N>
CMatrix<N> random_density(std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix<N> a;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      a(i, j) = Complex(g(rng), g(rng));
    }
  }
  CMatrix<N> rho = a * a.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  // Exact Hermitian symmetrisation.
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace eprdist::testing
