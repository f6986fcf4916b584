#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "eprdist/channel.h"
#include "eprdist/epr.h"
#include "eprdist/linalg.h"

namespace eprdist {

/// A validated density matrix: Hermitian within 1e-12, unit trace within
/// 1e-12, eigenvalues no lower than -1e-10.
template <std::size_t N>
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMatrix<N> &m);

  /// Maximally mixed state I/N.
  static DensityMatrix maximally_mixed();
  /// Projector onto a computational basis state.
  static DensityMatrix basis_state(std::size_t index);

  const CMatrix<N> &matrix() const { return m_; }
  const Complex &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  CMatrix<N> m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

extern template class DensityMatrix<2>;
extern template class DensityMatrix<4>;

/// Bell vector in the computational basis |00>, |01>, |10>, |11>.
std::array<Complex, 4> bell_vector(BellState kind);

DensityMatrix4 bell_state(BellState kind);

/// sum_k p_k sigma_k rho sigma_k.
DensityMatrix2 apply_single_qubit_pauli(const PauliProbs &p, const DensityMatrix2 &rho);

/// sum_{k,l} r_k s_l (sigma_k (x) sigma_l) rho (sigma_k (x) sigma_l), built
/// from explicit Kronecker products.
DensityMatrix4 apply_two_sided(const PauliProbs &r, const PauliProbs &s, const DensityMatrix4 &rho);

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The spectrum of rho * rho_tilde is taken from the Hermitian PSD matrix
/// sqrt(rho_tilde) rho sqrt(rho_tilde), which is similar to it.
double wootters_concurrence(const DensityMatrix4 &rho);

struct BellProjection {
  BellDiagonal weights;
  /// Frobenius norm of rho minus its Bell-diagonal part.
  double residual = 0.0;
};

BellProjection bell_diagonal_project(const DensityMatrix4 &rho);

/// Monte Carlo tally of Bell outcomes.
struct McEstimate {
  BellDiagonal bell_diagonal;
  std::uint64_t samples = 0;
  std::array<std::uint64_t, 4> counts{};
  /// Binomial standard error sqrt(f (1 - f) / samples) per weight.
  std::array<double, 4> standard_errors{};
};

/// Samples discrete error trajectories along both arms.
///
/// Each arm of length L is cut into ceil(L * segments_per_km) equal segments.
/// Every segment independently applies X, Y, Z with probabilities
/// mu_i * delta (delta = segment length) and I otherwise. The Pauli indices
/// are folded through the group product, and the final pair (k, l) acting on
/// |psi+> yields the Bell outcome of k ^ l (0 -> psi+, 1 -> phi+, 2 -> phi-,
/// 3 -> psi-). Randomness is keyed by (seed, sample index), so results are
/// identical for any `threads` value (0 selects the hardware concurrency).
McEstimate monte_carlo_transmit(const ErrorDensities &mu, const LinkGeometry &geom,
                                std::uint64_t segments_per_km, std::uint64_t samples,
                                std::uint64_t seed, unsigned threads = 0);

/// Bell outcome of a net error pair (k, l) applied to |psi+>.
BellState bell_outcome(unsigned k, unsigned l);

/// Counter-based generator: a SplitMix64 stream whose starting state is a
/// hash of (seed, stream index).
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

}  // namespace eprdist
