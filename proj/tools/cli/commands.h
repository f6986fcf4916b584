#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace eprdist::cli {

/// Everything a subcommand produces; the dispatcher picks one rendering.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::string table;
  std::string csv;
};

struct ComposeArgs {
  std::vector<std::string> p;
  std::optional<std::string> mu;
  std::optional<double> length_km;
  std::optional<std::uint64_t> iterate;
};

struct TransmitArgs {
  std::vector<std::string> p;
  std::optional<std::string> mu;
  std::optional<double> l1_km;
  std::optional<double> l2_km;
  bool verify_oracle = false;
};

struct ThresholdArgs {
  std::string mu;
  std::string method = "auto";
};

struct EstimateArgs {
  std::optional<double> qber;
  std::optional<double> length_km;
  std::optional<std::string> input;
};

struct SweepArgs {
  std::vector<std::string> mu;
  double l_max_km = 80.0;
  std::size_t steps = 100;
};

struct MonteCarloArgs {
  std::string mu;
  double l1_km = 0.0;
  double l2_km = 0.0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t segments_per_km = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

Report cmd_compose(const ComposeArgs &args);
Report cmd_transmit(const TransmitArgs &args);
Report cmd_threshold(const ThresholdArgs &args);
Report cmd_estimate_mu(const EstimateArgs &args);
Report cmd_sweep(const SweepArgs &args);
Report cmd_montecarlo(const MonteCarloArgs &args);

}  // namespace eprdist::cli
