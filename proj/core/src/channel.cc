#include "eprdist/channel.h"

#include <cmath>
#include <sstream>

#include "eprdist/errors.h"

namespace eprdist {

namespace {

std::array<double, 4> validated(std::array<double, 4> probs) {
  double sum = 0.0;
  for (double &p : probs) {
    if (!std::isfinite(p) || p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance) {
      throw ValidationError("probabilities must lie in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw ValidationError("probabilities must sum to 1");
  }
  for (double &p : probs) {
    p = std::min(std::max(p, 0.0), 1.0);
  }
  return probs;
}

// exp(-2 * rate * L) with the convention 0 * inf = 0.
double decay(double rate, double length_km) {
  if (rate == 0.0 || length_km == 0.0) {
    return 1.0;
  }
  return std::exp(-2.0 * rate * length_km);
}

void check_length(double length_km) {
  if (std::isnan(length_km) || length_km < 0.0) {
    throw ValidationError("length must be a nonnegative number of km");
  }
}

}  // namespace

PauliProbs::PauliProbs(double p0, double p1, double p2, double p3)
    : PauliProbs(std::array<double, 4>{p0, p1, p2, p3}) {}

PauliProbs::PauliProbs(const std::array<double, 4> &probs) : probs_(validated(probs)) {}

std::string PauliProbs::str() const {
  std::ostringstream out;
  out.precision(17);
  out << "PauliProbs(" << probs_[0] << ", " << probs_[1] << ", " << probs_[2] << ", " << probs_[3]
      << ")";
  return out.str();
}

ErrorDensities::ErrorDensities(double mu1, double mu2, double mu3) : mu_{mu1, mu2, mu3} {
  for (double mu : mu_) {
    if (!std::isfinite(mu) || mu < 0.0) {
      throw ValidationError("error densities must be finite and nonnegative");
    }
  }
}

std::string ErrorDensities::str() const {
  std::ostringstream out;
  out.precision(17);
  out << "ErrorDensities(" << mu_[0] << ", " << mu_[1] << ", " << mu_[2] << ")";
  return out.str();
}

PauliProbs from_decay_factors(const Lambdas &l) {
  return PauliProbs(0.25 * (1.0 + l.lambda1 + l.lambda2 + l.lambda3),
                    0.25 * (1.0 + l.lambda1 - l.lambda2 - l.lambda3),
                    0.25 * (1.0 - l.lambda1 + l.lambda2 - l.lambda3),
                    0.25 * (1.0 - l.lambda1 - l.lambda2 + l.lambda3));
}

Lambdas decay_factors(const PauliProbs &p) {
  return {1.0 - 2.0 * p.p2() - 2.0 * p.p3(), 1.0 - 2.0 * p.p1() - 2.0 * p.p3(),
          1.0 - 2.0 * p.p1() - 2.0 * p.p2()};
}

Lambdas decay_factors(const ErrorDensities &mu, double length_km) {
  check_length(length_km);
  return {decay(mu.mu2() + mu.mu3(), length_km), decay(mu.mu1() + mu.mu3(), length_km),
          decay(mu.mu1() + mu.mu2(), length_km)};
}

PauliProbs compose(const PauliProbs &first, const PauliProbs &second) {
  std::array<double, 4> out{};
  for (unsigned j = 0; j < 4; ++j) {
    for (unsigned k = 0; k < 4; ++k) {
      out[pauli_product(j, k)] += first[j] * second[k];
    }
  }
  return PauliProbs(out);
}

PauliProbs iterate(const PauliProbs &p, std::uint64_t n) {
  if (n == 0) {
    return PauliProbs::identity();
  }
  // Negative bases are legal here (e.g. p1 = 0.8); the exponent is integral.
  const Lambdas one = decay_factors(p);
  const auto power = static_cast<double>(n);
  return from_decay_factors(
      {std::pow(one.lambda1, power), std::pow(one.lambda2, power), std::pow(one.lambda3, power)});
}

PauliProbs iterate_bruteforce(const PauliProbs &p, std::uint64_t n) {
  if (n > kBruteforceIterationCap) {
    throw ValidationError("iterate_bruteforce is capped at 1e9 segments");
  }
  PauliProbs result;
  for (std::uint64_t i = 0; i < n; ++i) {
    result = compose(result, p);
  }
  return result;
}

PauliProbs at_length(const ErrorDensities &mu, double length_km) {
  return from_decay_factors(decay_factors(mu, length_km));
}

PauliProbs flip_at_length(double mu, FlipAxis axis, double length_km) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw ValidationError("error density must be finite and nonnegative");
  }
  check_length(length_km);
  const double flip = 0.5 * (1.0 - decay(mu, length_km));
  std::array<double, 4> probs{1.0 - flip, 0.0, 0.0, 0.0};
  switch (axis) {
    case FlipAxis::x: probs[1] = flip; break;
    case FlipAxis::y: probs[2] = flip; break;
    case FlipAxis::z: probs[3] = flip; break;
  }
  return PauliProbs(probs);
}

PauliProbs depolarizing_probs(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("depolarizing parameter must lie in [0, 1]");
  }
  return PauliProbs(1.0 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p);
}

}  // namespace eprdist
