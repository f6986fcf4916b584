#include "eprdist/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eprdist/epr.h"
#include "eprdist/errors.h"

namespace eprdist {

namespace {

constexpr double kDepolarizingQberCeiling = 0.75;

void check_rate(double mu) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw ValidationError("error density must be finite and nonnegative");
  }
}

}  // namespace

MeasurementPoint::MeasurementPoint(double qber, double total_length_km)
    : qber_(qber), length_(total_length_km) {
  if (!(qber >= 0.0 && qber < 1.0)) {
    throw ValidationError("qber must lie in [0, 1)");
  }
  if (!std::isfinite(total_length_km) || total_length_km <= 0.0) {
    throw ValidationError("total length must be positive and finite");
  }
}

ThresholdResult ThresholdResult::finite(double length_km) {
  if (!std::isfinite(length_km) || length_km <= 0.0) {
    throw ValidationError("threshold length must be positive and finite");
  }
  ThresholdResult r;
  r.length_ = length_km;
  return r;
}

ThresholdResult threshold_depolarizing(double mu) {
  check_rate(mu);
  if (mu == 0.0) {
    return ThresholdResult::never_vanishes();
  }
  return ThresholdResult::finite(std::log(3.0) / (4.0 * mu));
}

ThresholdResult threshold_double_flip(double mu) {
  check_rate(mu);
  if (mu == 0.0) {
    return ThresholdResult::never_vanishes();
  }
  return ThresholdResult::finite(std::log(1.0 + std::numbers::sqrt2) / (2.0 * mu));
}

ThresholdResult threshold_generic(const ErrorDensities &mu) {
  const auto positive = std::count_if(mu.values().begin(), mu.values().end(),
                                      [](double m) { return m > 0.0; });
  if (positive < 2) {
    return ThresholdResult::never_vanishes();
  }

  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (concurrence_vs_length(mu, hi) > 0.0) {
    if (++doublings > kThresholdMaxDoublings) {
      return ThresholdResult::never_vanishes();
    }
    lo = hi;
    hi *= 2.0;
  }
  // Invariant: C(lo) > 0 (or lo == 0) and C(hi) == 0.
  while (hi - lo > kThresholdTolerance) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (concurrence_vs_length(mu, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return ThresholdResult::finite(hi);
}

std::optional<ThresholdResult> threshold_closed_form(const ErrorDensities &mu) {
  std::array<double, 3> sorted = mu.values();
  std::sort(sorted.begin(), sorted.end());
  if (sorted[1] == 0.0) {
    return ThresholdResult::never_vanishes();
  }
  if (sorted[0] == 0.0 && sorted[1] == sorted[2]) {
    return threshold_double_flip(sorted[2]);
  }
  if (sorted[0] == sorted[2]) {
    return threshold_depolarizing(sorted[0]);
  }
  return std::nullopt;
}

double depolarizing_qber(double mu, double total_length_km) {
  check_rate(mu);
  return -0.75 * std::expm1(-4.0 * mu * total_length_km);
}

double estimate_mu(const MeasurementPoint &point) {
  if (point.qber() >= kDepolarizingQberCeiling) {
    throw NumericError("qber exceeds depolarizing fidelity floor (must be below 0.75)");
  }
  // F = 1 - qber = (1 + 3 e^{-4 mu L}) / 4  =>  e^{-4 mu L} = 1 - 4 qber / 3.
  return -std::log1p(-4.0 * point.qber() / 3.0) / (4.0 * point.total_length_km());
}

MuFit fit_mu(std::span<const MeasurementPoint> points) {
  if (points.empty()) {
    throw ValidationError("fit_mu needs at least one measurement point");
  }
  std::vector<double> estimates;
  estimates.reserve(points.size());
  for (const auto &p : points) {
    estimates.push_back(estimate_mu(p));
  }

  auto rms = [&](double mu) {
    double sum = 0.0;
    for (const auto &p : points) {
      const double r = p.qber() - depolarizing_qber(mu, p.total_length_km());
      sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(points.size()));
  };

  if (points.size() == 1) {
    return {estimates.front(), rms(estimates.front())};
  }

  // d/dmu of sum (q_i - q_model)^2, up to a positive factor.
  auto slope = [&](double mu) {
    double sum = 0.0;
    for (const auto &p : points) {
      const double length = p.total_length_km();
      const double residual = p.qber() - depolarizing_qber(mu, length);
      sum -= residual * length * std::exp(-4.0 * mu * length);
    }
    return sum;
  };

  // Below every per-point estimate all residuals are positive (slope < 0),
  // above every estimate they are negative (slope > 0).
  double lo = *std::min_element(estimates.begin(), estimates.end());
  double hi = *std::max_element(estimates.begin(), estimates.end());
  if (slope(lo) >= 0.0) {
    return {lo, rms(lo)};
  }
  if (slope(hi) <= 0.0) {
    return {hi, rms(hi)};
  }
  // Bisect to machine precision, well inside the 1e-12 tolerance.
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (slope(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mu = lo + 0.5 * (hi - lo);
  return {mu, rms(mu)};
}

SweepTable sweep(const ErrorDensities &mu, double l_max_km, std::size_t steps) {
  if (!std::isfinite(l_max_km) || l_max_km <= 0.0) {
    throw ValidationError("l_max must be positive and finite");
  }
  if (steps < 2) {
    throw ValidationError("sweep needs at least 2 steps");
  }
  SweepTable table{mu, {}};
  table.rows.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double length =
        i == steps ? l_max_km : l_max_km * static_cast<double>(i) / static_cast<double>(steps);
    const BellDiagonal state = transmit_at_length(mu, LinkGeometry(length, 0.0));
    table.rows.push_back({length, concurrence_vs_length(mu, length), fidelity_psi_plus(state)});
  }
  return table;
}

}  // namespace eprdist
