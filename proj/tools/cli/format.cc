#include "format.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "eprdist/errors.h"

namespace eprdist::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ValidationError(fmt::format("{}: '{}' is not a finite number", context, text));
  }
  return value;
}

}  // namespace

std::string machine_number(double x) { return fmt::format("{:.16e}", x); }

std::string table_number(double x) { return fmt::format("{:.6g}", x); }

std::vector<double> parse_number_list(std::string_view text, std::size_t expected,
                                      std::string_view flag) {
  const auto fields = split(text);
  if (fields.size() != expected) {
    throw ValidationError(
        fmt::format("{} expects {} comma-separated numbers, got '{}'", flag, expected, text));
  }
  std::vector<double> values;
  values.reserve(expected);
  for (auto f : fields) {
    values.push_back(parse_number(f, flag));
  }
  return values;
}

std::vector<MeasurementPoint> parse_measurement_csv(std::string_view content) {
  std::vector<MeasurementPoint> points;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    const std::string_view line =
        trim(content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const auto fields = split(line);
    if (!header_seen) {
      if (fields.size() < 2 || fields[0] != "qber" || fields[1] != "total_length_km") {
        throw ValidationError("measurement CSV header must start with qber,total_length_km");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 2) {
      throw ValidationError(fmt::format("measurement CSV line {}: expected 2 columns", line_no));
    }
    const auto context = fmt::format("measurement CSV line {}", line_no);
    points.emplace_back(parse_number(fields[0], context), parse_number(fields[1], context));
  }
  if (!header_seen) {
    throw ValidationError("measurement CSV is empty");
  }
  if (points.empty()) {
    throw ValidationError("measurement CSV has no data rows");
  }
  return points;
}

std::vector<MeasurementPoint> read_measurement_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open measurement file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_measurement_csv(buffer.str());
}

}  // namespace eprdist::cli
