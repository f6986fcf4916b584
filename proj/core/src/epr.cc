#include "eprdist/epr.h"

#include <algorithm>
#include <cmath>

#include "eprdist/errors.h"

namespace eprdist {

namespace {

std::array<double, 4> validated(std::array<double, 4> w) {
  double sum = 0.0;
  for (double &x : w) {
    if (!std::isfinite(x) || x < -kProbabilityTolerance || x > 1.0 + kProbabilityTolerance) {
      throw ValidationError("Bell weights must lie in [0, 1]");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw ValidationError("Bell weights must sum to 1");
  }
  for (double &x : w) {
    x = std::clamp(x, 0.0, 1.0);
  }
  return w;
}

void check_rate(double mu) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw ValidationError("error density must be finite and nonnegative");
  }
}

void check_length(double length_km) {
  if (std::isnan(length_km) || length_km < 0.0) {
    throw ValidationError("length must be a nonnegative number of km");
  }
}

// e^{-k mu L} - 1, with 0 * inf treated as 0.
double decay_minus_one(double rate, double length_km) {
  if (rate == 0.0 || length_km == 0.0) {
    return 0.0;
  }
  return std::expm1(-rate * length_km);
}

double decay(double rate, double length_km) {
  if (rate == 0.0 || length_km == 0.0) {
    return 1.0;
  }
  return std::exp(-rate * length_km);
}

}  // namespace

std::string_view bell_state_name(BellState state) {
  switch (state) {
    case BellState::psi_plus: return "psi+";
    case BellState::psi_minus: return "psi-";
    case BellState::phi_plus: return "phi+";
    case BellState::phi_minus: return "phi-";
  }
  return "?";
}

BellDiagonal::BellDiagonal(double a, double b, double c, double d)
    : BellDiagonal(std::array<double, 4>{a, b, c, d}) {}

BellDiagonal::BellDiagonal(const std::array<double, 4> &weights) : w_(validated(weights)) {}

LinkGeometry::LinkGeometry(double l1_km, double l2_km) : l1_(l1_km), l2_(l2_km) {
  if (!std::isfinite(l1_km) || !std::isfinite(l2_km) || l1_km < 0.0 || l2_km < 0.0) {
    throw ValidationError("link lengths must be finite and nonnegative");
  }
}

BellDiagonal transmit(const PauliProbs &r, const PauliProbs &s) {
  const double a = r[0] * s[0] + r[1] * s[1] + r[2] * s[2] + r[3] * s[3];
  const double b = r[0] * s[3] + r[1] * s[2] + r[2] * s[1] + r[3] * s[0];
  const double c = r[0] * s[1] + r[1] * s[0] + r[2] * s[3] + r[3] * s[2];
  const double d = r[0] * s[2] + r[1] * s[3] + r[2] * s[0] + r[3] * s[1];
  const double total = a + b + c + d;
  return BellDiagonal(a / total, b / total, c / total, d / total);
}

BellDiagonal transmit_at_length(const ErrorDensities &mu, const LinkGeometry &geom) {
  const double length = geom.total_km();
  const double e12 = decay(2.0 * (mu.mu1() + mu.mu2()), length);
  const double e13 = decay(2.0 * (mu.mu1() + mu.mu3()), length);
  const double e23 = decay(2.0 * (mu.mu2() + mu.mu3()), length);
  return BellDiagonal(0.25 * (1.0 + e12 + e13 + e23), 0.25 * (1.0 + e12 - e13 - e23),
                      0.25 * (1.0 - e12 - e13 + e23), 0.25 * (1.0 - e12 + e13 - e23));
}

double concurrence(const BellDiagonal &state) {
  const auto &w = state.weights();
  const double largest = *std::max_element(w.begin(), w.end());
  return std::clamp(2.0 * largest - 1.0, 0.0, 1.0);
}

double fidelity_psi_plus(const BellDiagonal &state) { return state.a(); }

BellState dominant_bell_state(const BellDiagonal &state) {
  const auto &w = state.weights();
  // max_element returns the first of equal maxima.
  return static_cast<BellState>(std::max_element(w.begin(), w.end()) - w.begin());
}

double concurrence_vs_length(const ErrorDensities &mu, double total_length_km) {
  check_length(total_length_km);
  // (e12 + e13 + e23 - 1) / 2, with the -1 folded into the slowest-decaying
  // exponential through expm1 so that tiny concurrences keep their digits.
  std::array<double, 3> rates{2.0 * (mu.mu1() + mu.mu2()), 2.0 * (mu.mu1() + mu.mu3()),
                              2.0 * (mu.mu2() + mu.mu3())};
  std::sort(rates.begin(), rates.end());
  const double value = decay_minus_one(rates[0], total_length_km) +
                       (decay(rates[2], total_length_km) + decay(rates[1], total_length_km));
  return std::clamp(0.5 * value, 0.0, 1.0);
}

double bitflip_fidelity(double mu, double total_length_km) {
  check_rate(mu);
  check_length(total_length_km);
  return 0.5 * (1.0 + decay(2.0 * mu, total_length_km));
}

double bitflip_concurrence(double mu, double total_length_km) {
  check_rate(mu);
  check_length(total_length_km);
  return decay(2.0 * mu, total_length_km);
}

BellDiagonal doubleflip_coefficients(double mu, double total_length_km) {
  check_rate(mu);
  check_length(total_length_km);
  const double x = decay(2.0 * mu, total_length_km);
  return BellDiagonal(0.25 * (1.0 + x) * (1.0 + x), 0.25 * (1.0 - x) * (1.0 - x),
                      0.25 * (1.0 - x * x), 0.25 * (1.0 - x * x));
}

double doubleflip_concurrence(double mu, double total_length_km) {
  check_rate(mu);
  check_length(total_length_km);
  const double x = decay(2.0 * mu, total_length_km);
  return std::clamp(0.5 * (x * x + 2.0 * x - 1.0), 0.0, 1.0);
}

BellDiagonal depolarizing_coefficients(double mu, double total_length_km) {
  check_rate(mu);
  check_length(total_length_km);
  const double x = decay(4.0 * mu, total_length_km);
  const double rest = 0.25 * (1.0 - x);
  return BellDiagonal(0.25 * (1.0 + 3.0 * x), rest, rest, rest);
}

double depolarizing_concurrence(double mu, double total_length_km) {
  check_rate(mu);
  check_length(total_length_km);
  return std::clamp(0.5 * (3.0 * decay(4.0 * mu, total_length_km) - 1.0), 0.0, 1.0);
}

}  // namespace eprdist
