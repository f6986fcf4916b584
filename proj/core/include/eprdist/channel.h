#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace eprdist {

/// Absolute tolerance used when validating probability vectors.
inline constexpr double kProbabilityTolerance = 1e-12;

/// Largest segment count accepted by iterate_bruteforce.
inline constexpr std::uint64_t kBruteforceIterationCap = 1'000'000'000ULL;

/// A single-qubit Pauli channel: the probabilities of applying I, X, Y, Z.
///
/// Indices follow the Pauli labels (0 = I, 1 = X, 2 = Y, 3 = Z). Up to a
/// global phase the Paulis form the Klein four-group, whose product on
/// indices is bitwise XOR; composition of channels is convolution over that
/// group. Construction validates the distribution: entries must lie in
/// [-tol, 1 + tol] and sum to 1 within tol; tiny negatives are clamped to 0.
class PauliProbs {
 public:
  /// The identity (noiseless) channel.
  PauliProbs() = default;
  PauliProbs(double p0, double p1, double p2, double p3);
  explicit PauliProbs(const std::array<double, 4> &probs);

  static PauliProbs identity() { return PauliProbs(); }

  double p0() const { return probs_[0]; }
  double p1() const { return probs_[1]; }
  double p2() const { return probs_[2]; }
  double p3() const { return probs_[3]; }
  double operator[](std::size_t k) const { return probs_[k]; }
  const std::array<double, 4> &values() const { return probs_; }

  std::string str() const;

 private:
  std::array<double, 4> probs_{1.0, 0.0, 0.0, 0.0};
};

/// Per-length error rates (1/km) for X, Y and Z errors on a channel.
class ErrorDensities {
 public:
  ErrorDensities() = default;
  ErrorDensities(double mu1, double mu2, double mu3);

  /// All three rates equal.
  static ErrorDensities depolarizing(double mu) { return {mu, mu, mu}; }

  double mu1() const { return mu_[0]; }
  double mu2() const { return mu_[1]; }
  double mu3() const { return mu_[2]; }
  double operator[](std::size_t i) const { return mu_[i]; }
  const std::array<double, 3> &values() const { return mu_; }
  double total() const { return mu_[0] + mu_[1] + mu_[2]; }

  std::string str() const;

 private:
  std::array<double, 3> mu_{0.0, 0.0, 0.0};
};

/// Eigenvalues of the concatenation recursion: the decay factors of the
/// X/Y/Z Bloch components under a Pauli channel.
struct Lambdas {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda3 = 1.0;
};

enum class FlipAxis { x, y, z };

/// Index of the Pauli product sigma_a * sigma_b (up to phase).
constexpr unsigned pauli_product(unsigned a, unsigned b) { return a ^ b; }

/// Maps (1, lambda1, lambda2, lambda3) back to channel probabilities.
PauliProbs from_decay_factors(const Lambdas &lambdas);

/// Decay factors of a channel: lambda1 = 1 - 2p2 - 2p3 and cyclic.
Lambdas decay_factors(const PauliProbs &p);

/// Decay factors of a channel of length L built from error densities.
Lambdas decay_factors(const ErrorDensities &mu, double length_km);

/// Applies `first` then `second`. Commutative and associative.
PauliProbs compose(const PauliProbs &first, const PauliProbs &second);

/// n-fold concatenation via the diagonalised recursion (closed form).
PauliProbs iterate(const PauliProbs &p, std::uint64_t n);

/// n-fold concatenation by repeated composition. Reference for `iterate`.
PauliProbs iterate_bruteforce(const PauliProbs &p, std::uint64_t n);

/// Channel of the given length in the continuum limit of short segments.
/// `length_km` may be +infinity.
PauliProbs at_length(const ErrorDensities &mu, double length_km);

/// Single flip channel along one axis.
PauliProbs flip_at_length(double mu, FlipAxis axis, double length_km);

/// Depolarizing channel E(rho) = p I/2 + (1 - p) rho.
PauliProbs depolarizing_probs(double p);

}  // namespace eprdist
