#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eprdist/analysis.h"

namespace eprdist::cli {

/// 17 significant digits, scientific notation. Lossless for doubles.
std::string machine_number(double x);

/// 6 significant digits for human-readable tables.
std::string table_number(double x);

/// Parses "a,b,c" into exactly `expected` finite numbers.
std::vector<double> parse_number_list(std::string_view text, std::size_t expected,
                                      std::string_view flag);

/// Reads a measurement CSV. The header must begin with
/// `qber,total_length_km`; further columns are ignored.
std::vector<MeasurementPoint> read_measurement_csv(const std::string &path);
std::vector<MeasurementPoint> parse_measurement_csv(std::string_view content);

}  // namespace eprdist::cli
