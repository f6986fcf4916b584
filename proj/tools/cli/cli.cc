#include "cli.h"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "commands.h"
#include "eprdist/errors.h"

namespace eprdist::cli {

namespace {

struct OutputOptions {
  std::string format = "table";
  std::optional<std::string> path;
};

void add_output_options(CLI::App *sub, OutputOptions &opts, const std::string &default_format) {
  opts.format = default_format;
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output", opts.path, "Write the report to PATH instead of standard output");
}

std::string render(const Report &report, const std::string &format) {
  if (format == "json") {
    const nlohmann::json doc = {
        {"command", report.command}, {"inputs", report.inputs}, {"results", report.results}};
    return doc.dump(2) + "\n";
  }
  if (format == "csv") {
    return report.csv;
  }
  return report.table;
}

void emit(const std::string &text, const OutputOptions &opts, std::ostream &out) {
  if (!opts.path) {
    out << text;
    return;
  }
  std::ofstream file(*opts.path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + *opts.path + "' for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw IoError("failed writing '" + *opts.path + "'");
  }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Entanglement of EPR pairs distributed through Pauli channels", "eprdist"};
  app.require_subcommand(1);

  OutputOptions compose_out, transmit_out, threshold_out, estimate_out, sweep_out, mc_out;

  ComposeArgs compose_args;
  auto *compose = app.add_subcommand("compose", "Compose, iterate or build a Pauli channel");
  auto *compose_p = compose->add_option(
      "--p", compose_args.p, "Channel probabilities p0,p1,p2,p3 (repeat to compose in order)");
  auto *compose_mu = compose->add_option("--mu", compose_args.mu, "Error densities mu1,mu2,mu3 (1/km)");
  auto *compose_len = compose->add_option("--length", compose_args.length_km, "Channel length (km)");
  compose->add_option("--iterate", compose_args.iterate, "Concatenate the channel N times");
  compose_p->excludes(compose_mu)->excludes(compose_len);
  add_output_options(compose, compose_out, "table");

  TransmitArgs transmit_args;
  auto *transmit = app.add_subcommand("transmit", "Send |psi+> through two Pauli channels");
  auto *transmit_p =
      transmit->add_option("--p", transmit_args.p, "Per-arm probabilities (give exactly twice)");
  auto *transmit_mu = transmit->add_option("--mu", transmit_args.mu, "Error densities mu1,mu2,mu3 (1/km)");
  auto *transmit_l1 = transmit->add_option("--l1", transmit_args.l1_km, "Source to user A (km)");
  auto *transmit_l2 = transmit->add_option("--l2", transmit_args.l2_km, "Source to user B (km)");
  transmit_p->excludes(transmit_mu)->excludes(transmit_l1)->excludes(transmit_l2);
  transmit->add_flag("--verify-oracle", transmit_args.verify_oracle,
                     "Cross-check against dense density-matrix evolution");
  add_output_options(transmit, transmit_out, "table");

  ThresholdArgs threshold_args;
  auto *threshold = app.add_subcommand("threshold", "Length at which the concurrence vanishes");
  threshold->add_option("--mu", threshold_args.mu, "Error densities mu1,mu2,mu3 (1/km)")->required();
  threshold->add_option("--method", threshold_args.method, "auto, closed or bisect")
      ->check(CLI::IsMember({"auto", "closed", "bisect"}))
      ->capture_default_str();
  add_output_options(threshold, threshold_out, "table");

  EstimateArgs estimate_args;
  auto *estimate = app.add_subcommand("estimate-mu", "Depolarizing error density from QBER data");
  auto *estimate_q = estimate->add_option("--qber", estimate_args.qber, "Channel-attributed QBER");
  auto *estimate_l = estimate->add_option("--length", estimate_args.length_km, "Total length L1+L2 (km)");
  auto *estimate_in = estimate->add_option("--input", estimate_args.input,
                                           "Measurement CSV with header qber,total_length_km");
  estimate_in->excludes(estimate_q)->excludes(estimate_l);
  add_output_options(estimate, estimate_out, "table");

  SweepArgs sweep_args;
  auto *sweep = app.add_subcommand("sweep", "Concurrence and fidelity versus total length");
  sweep->add_option("--mu", sweep_args.mu, "Error densities mu1,mu2,mu3 (repeat for more curves)");
  sweep->add_option("--lmax", sweep_args.l_max_km, "Largest total length (km)")->capture_default_str();
  sweep->add_option("--steps", sweep_args.steps, "Grid intervals")->capture_default_str();
  add_output_options(sweep, sweep_out, "csv");

  MonteCarloArgs mc_args;
  auto *mc = app.add_subcommand("montecarlo", "Sample error trajectories and compare to closed form");
  mc->add_option("--mu", mc_args.mu, "Error densities mu1,mu2,mu3 (1/km)")->required();
  mc->add_option("--l1", mc_args.l1_km, "Source to user A (km)")->required();
  mc->add_option("--l2", mc_args.l2_km, "Source to user B (km)")->required();
  mc->add_option("--samples", mc_args.samples)->capture_default_str();
  mc->add_option("--segments-per-km", mc_args.segments_per_km)->capture_default_str();
  mc->add_option("--seed", mc_args.seed)->capture_default_str();
  mc->add_option("--threads", mc_args.threads, "Worker threads (0 = hardware)")->capture_default_str();
  add_output_options(mc, mc_out, "table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*compose) {
      emit(render(cmd_compose(compose_args), compose_out.format), compose_out, out);
    } else if (*transmit) {
      emit(render(cmd_transmit(transmit_args), transmit_out.format), transmit_out, out);
    } else if (*threshold) {
      emit(render(cmd_threshold(threshold_args), threshold_out.format), threshold_out, out);
    } else if (*estimate) {
      emit(render(cmd_estimate_mu(estimate_args), estimate_out.format), estimate_out, out);
    } else if (*sweep) {
      emit(render(cmd_sweep(sweep_args), sweep_out.format), sweep_out, out);
    } else if (*mc) {
      emit(render(cmd_montecarlo(mc_args), mc_out.format), mc_out, out);
    }
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericError &e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}

}  // namespace eprdist::cli
