#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "eprdist/channel.h"

namespace eprdist {

/// The Bell basis, in the order used for Bell-diagonal weights.
///
///   psi_plus  = (|00> + |11>)/sqrt2     psi_minus = (|00> - |11>)/sqrt2
///   phi_plus  = (|01> + |10>)/sqrt2     phi_minus = (|01> - |10>)/sqrt2
enum class BellState { psi_plus = 0, psi_minus = 1, phi_plus = 2, phi_minus = 3 };

std::string_view bell_state_name(BellState state);

/// A two-qubit state diagonal in the Bell basis, with weights
/// (a, b, c, d) on (psi+, psi-, phi+, phi-).
class BellDiagonal {
 public:
  BellDiagonal() = default;
  BellDiagonal(double a, double b, double c, double d);
  explicit BellDiagonal(const std::array<double, 4> &weights);

  double a() const { return w_[0]; }
  double b() const { return w_[1]; }
  double c() const { return w_[2]; }
  double d() const { return w_[3]; }
  double weight(BellState s) const { return w_[static_cast<std::size_t>(s)]; }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::array<double, 4> &weights() const { return w_; }

 private:
  std::array<double, 4> w_{1.0, 0.0, 0.0, 0.0};
};

/// Distances from the source to the two users.
class LinkGeometry {
 public:
  LinkGeometry() = default;
  LinkGeometry(double l1_km, double l2_km);

  double l1_km() const { return l1_; }
  double l2_km() const { return l2_; }
  double total_km() const { return l1_ + l2_; }

 private:
  double l1_ = 0.0;
  double l2_ = 0.0;
};

/// Output of |psi+> after channel `r` on the first qubit and `s` on the second.
BellDiagonal transmit(const PauliProbs &r, const PauliProbs &s);

/// transmit() with both arms built from the same error densities. Depends
/// only on the total length.
BellDiagonal transmit_at_length(const ErrorDensities &mu, const LinkGeometry &geom);

/// Concurrence of a Bell-diagonal state: max(0, 2 max(a,b,c,d) - 1).
double concurrence(const BellDiagonal &state);

double fidelity_psi_plus(const BellDiagonal &state);

/// The Bell state with the largest weight; ties resolve to the lowest index.
BellState dominant_bell_state(const BellDiagonal &state);

/// Concurrence of the received pair as a function of total length L1 + L2.
double concurrence_vs_length(const ErrorDensities &mu, double total_length_km);

// Closed forms for the three special channels.

/// mu2 = mu3 = 0: fidelity (1 + e^{-2 mu L}) / 2.
double bitflip_fidelity(double mu, double total_length_km);
/// mu2 = mu3 = 0: concurrence e^{-2 mu L}, positive for every finite L.
double bitflip_concurrence(double mu, double total_length_km);

/// mu1 = mu2 = mu, mu3 = 0.
BellDiagonal doubleflip_coefficients(double mu, double total_length_km);
double doubleflip_concurrence(double mu, double total_length_km);

/// mu1 = mu2 = mu3 = mu.
BellDiagonal depolarizing_coefficients(double mu, double total_length_km);
double depolarizing_concurrence(double mu, double total_length_km);

}  // namespace eprdist
