#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eprdist/channel.h"

namespace eprdist {

/// Channel-attributed error rate observed over a total link length.
///
/// qber must lie in [0, 1) and the length must be positive. The tighter bound
/// qber < 3/4 required by the depolarizing model is enforced by the
/// estimators, which raise NumericError beyond it.
class MeasurementPoint {
 public:
  MeasurementPoint(double qber, double total_length_km);

  double qber() const { return qber_; }
  double total_length_km() const { return length_; }

 private:
  double qber_;
  double length_;
};

/// Length at which the received pair stops being entangled.
class ThresholdResult {
 public:
  static ThresholdResult finite(double length_km);
  static ThresholdResult never_vanishes() { return ThresholdResult(); }

  bool is_finite() const { return length_.has_value(); }
  /// Throws std::bad_optional_access when the concurrence never vanishes.
  double length_km() const { return length_.value(); }

 private:
  ThresholdResult() = default;
  std::optional<double> length_;
};

/// ln 3 / (4 mu).
ThresholdResult threshold_depolarizing(double mu);

/// ln(1 + sqrt2) / (2 mu), the root of e^{-4 mu L} + 2 e^{-2 mu L} - 1.
ThresholdResult threshold_double_flip(double mu);

inline constexpr double kThresholdTolerance = 1e-10;
inline constexpr int kThresholdMaxDoublings = 60;

/// Threshold for arbitrary densities by bisection on concurrence_vs_length.
/// The returned length is the upper end of the final bracket, where the
/// concurrence is exactly zero.
ThresholdResult threshold_generic(const ErrorDensities &mu);

/// Closed-form threshold when the densities match a special case (single
/// flip, two equal flips, depolarizing); empty otherwise.
std::optional<ThresholdResult> threshold_closed_form(const ErrorDensities &mu);

/// Depolarizing rate that maps to this QBER, reading qber as 1 - F(psi+).
double estimate_mu(const MeasurementPoint &point);

/// QBER predicted by the depolarizing model: 3/4 (1 - e^{-4 mu L}).
double depolarizing_qber(double mu, double total_length_km);

struct MuFit {
  double mu = 0.0;
  double rms_residual = 0.0;
};

/// Least-squares depolarizing rate for several points.
MuFit fit_mu(std::span<const MeasurementPoint> points);

struct SweepRow {
  double length_km = 0.0;
  double concurrence = 0.0;
  double fidelity_psi_plus = 0.0;
};

struct SweepTable {
  ErrorDensities mu;
  std::vector<SweepRow> rows;
};

/// steps + 1 rows on the uniform grid 0, l_max/steps, ..., l_max.
SweepTable sweep(const ErrorDensities &mu, double l_max_km, std::size_t steps);

}  // namespace eprdist
