#include "commands.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "eprdist/analysis.h"
#include "eprdist/channel.h"
#include "eprdist/epr.h"
#include "eprdist/errors.h"
#include "eprdist/oracle.h"
#include "format.h"

namespace eprdist::cli {

namespace {

using nlohmann::json;

constexpr double kMethodAgreementKm = 1e-9;

PauliProbs parse_probs(const std::string &text) {
  const auto v = parse_number_list(text, 4, "--p");
  return PauliProbs(v[0], v[1], v[2], v[3]);
}

ErrorDensities parse_mu(const std::string &text) {
  const auto v = parse_number_list(text, 3, "--mu");
  return ErrorDensities(v[0], v[1], v[2]);
}

json to_json(const PauliProbs &p) { return json::array({p[0], p[1], p[2], p[3]}); }
json to_json(const ErrorDensities &mu) { return json::array({mu[0], mu[1], mu[2]}); }

json to_json(const BellDiagonal &w) {
  return {{"a", w.a()}, {"b", w.b()}, {"c", w.c()}, {"d", w.d()}};
}

std::string row(std::string_view key, double value) {
  return fmt::format("{:<22}{}\n", key, table_number(value));
}

std::string row(std::string_view key, std::string_view value) {
  return fmt::format("{:<22}{}\n", key, value);
}

constexpr std::array<BellState, 4> kBellOrder{BellState::psi_plus, BellState::psi_minus,
                                              BellState::phi_plus, BellState::phi_minus};

}  // namespace

Report cmd_compose(const ComposeArgs &args) {
  Report report{.command = "compose"};
  PauliProbs result;
  if (!args.p.empty()) {
    if (args.mu || args.length_km) {
      throw ValidationError("--p cannot be combined with --mu/--length");
    }
    json channels = json::array();
    for (const auto &text : args.p) {
      const PauliProbs p = parse_probs(text);
      channels.push_back(to_json(p));
      result = compose(result, p);
    }
    report.inputs["p"] = channels;
  } else if (args.mu) {
    if (!args.length_km) {
      throw ValidationError("--mu requires --length");
    }
    const ErrorDensities mu = parse_mu(*args.mu);
    result = at_length(mu, *args.length_km);
    report.inputs["mu"] = to_json(mu);
    report.inputs["length_km"] = *args.length_km;
  } else {
    throw ValidationError("compose needs --p or --mu with --length");
  }
  if (args.iterate) {
    result = iterate(result, *args.iterate);
    report.inputs["iterate"] = *args.iterate;
  }

  const Lambdas lambdas = decay_factors(result);
  report.results["probs"] = to_json(result);
  report.results["lambdas"] = json::array({lambdas.lambda1, lambdas.lambda2, lambdas.lambda3});

  for (std::size_t k = 0; k < 4; ++k) {
    report.table += row(fmt::format("p{}", k), result[k]);
  }
  report.table += row("lambda1", lambdas.lambda1);
  report.table += row("lambda2", lambdas.lambda2);
  report.table += row("lambda3", lambdas.lambda3);

  report.csv = "p0,p1,p2,p3,lambda1,lambda2,lambda3\n";
  report.csv += fmt::format("{},{},{},{},{},{},{}\n", machine_number(result[0]),
                            machine_number(result[1]), machine_number(result[2]),
                            machine_number(result[3]), machine_number(lambdas.lambda1),
                            machine_number(lambdas.lambda2), machine_number(lambdas.lambda3));
  return report;
}

Report cmd_transmit(const TransmitArgs &args) {
  Report report{.command = "transmit"};
  PauliProbs r;
  PauliProbs s;
  BellDiagonal state;
  if (!args.p.empty()) {
    if (args.mu || args.l1_km || args.l2_km) {
      throw ValidationError("--p cannot be combined with --mu/--l1/--l2");
    }
    if (args.p.size() != 2) {
      throw ValidationError("transmit takes --p exactly twice (one channel per arm)");
    }
    r = parse_probs(args.p[0]);
    s = parse_probs(args.p[1]);
    state = transmit(r, s);
    report.inputs["p"] = json::array({to_json(r), to_json(s)});
  } else if (args.mu) {
    if (!args.l1_km || !args.l2_km) {
      throw ValidationError("--mu requires --l1 and --l2");
    }
    const ErrorDensities mu = parse_mu(*args.mu);
    const LinkGeometry geom(*args.l1_km, *args.l2_km);
    r = at_length(mu, geom.l1_km());
    s = at_length(mu, geom.l2_km());
    state = transmit_at_length(mu, geom);
    report.inputs["mu"] = to_json(mu);
    report.inputs["l1_km"] = geom.l1_km();
    report.inputs["l2_km"] = geom.l2_km();
    report.results["total_length_km"] = geom.total_km();
    report.table += row("total_length_km", geom.total_km());
  } else {
    throw ValidationError("transmit needs --mu with --l1/--l2, or --p twice");
  }

  const double conc = concurrence(state);
  const double fidelity = fidelity_psi_plus(state);
  const BellState dominant = dominant_bell_state(state);
  report.results["bell_diagonal"] = to_json(state);
  report.results["fidelity_psi_plus"] = fidelity;
  report.results["concurrence"] = conc;
  report.results["dominant_bell_state"] = std::string(bell_state_name(dominant));

  report.table += row("a (psi+)", state.a());
  report.table += row("b (psi-)", state.b());
  report.table += row("c (phi+)", state.c());
  report.table += row("d (phi-)", state.d());
  report.table += row("fidelity_psi_plus", fidelity);
  report.table += row("concurrence", conc);
  report.table += row("dominant_bell_state", bell_state_name(dominant));

  report.csv = "a,b,c,d,fidelity,concurrence";
  std::string values = fmt::format("{},{},{},{},{},{}", machine_number(state.a()),
                                   machine_number(state.b()), machine_number(state.c()),
                                   machine_number(state.d()), machine_number(fidelity),
                                   machine_number(conc));

  if (args.verify_oracle) {
    const DensityMatrix4 dense = apply_two_sided(r, s, bell_state(BellState::psi_plus));
    const BellProjection projection = bell_diagonal_project(dense);
    double deviation = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      deviation = std::max(deviation, std::abs(projection.weights[i] - state[i]));
    }
    const double wootters = wootters_concurrence(dense);
    const double concurrence_deviation = std::abs(wootters - conc);
    report.results["oracle"] = {{"max_weight_deviation", deviation},
                                {"bell_residual", projection.residual},
                                {"wootters_concurrence", wootters},
                                {"concurrence_deviation", concurrence_deviation}};
    report.table += row("oracle_max_deviation", deviation);
    report.table += row("oracle_bell_residual", projection.residual);
    report.table += row("oracle_concurrence", wootters);
    report.csv += ",oracle_max_deviation,oracle_bell_residual,oracle_concurrence";
    values += fmt::format(",{},{},{}", machine_number(deviation),
                          machine_number(projection.residual), machine_number(wootters));
  }
  report.csv += "\n" + values + "\n";
  return report;
}

Report cmd_threshold(const ThresholdArgs &args) {
  Report report{.command = "threshold"};
  const ErrorDensities mu = parse_mu(args.mu);
  report.inputs["mu"] = to_json(mu);
  report.inputs["method"] = args.method;

  if (args.method != "auto" && args.method != "closed" && args.method != "bisect") {
    throw ValidationError("--method must be auto, closed or bisect");
  }
  const auto closed = threshold_closed_form(mu);
  if (args.method == "closed" && !closed) {
    throw ValidationError("no closed-form threshold for these densities; use --method bisect");
  }
  // Bisection always runs so the two routes can be cross-checked.
  const ThresholdResult bisected = threshold_generic(mu);
  const bool use_closed = closed && args.method != "bisect";
  const std::string used = use_closed ? "closed" : "bisect";
  const ThresholdResult result = use_closed ? *closed : bisected;

  if (closed) {
    if (closed->is_finite() != bisected.is_finite()) {
      throw NumericError("closed-form and bisection thresholds disagree on finiteness");
    }
    if (closed->is_finite()) {
      const double deviation = std::abs(closed->length_km() - bisected.length_km());
      report.results["method_deviation_km"] = deviation;
      if (deviation > kMethodAgreementKm) {
        throw NumericError(
            fmt::format("closed-form and bisection thresholds differ by {} km", deviation));
      }
    }
  }

  report.results["method"] = used;
  report.results["never_vanishes"] = !result.is_finite();
  if (result.is_finite()) {
    report.results["threshold_km"] = result.length_km();
    report.table += row("threshold_km", result.length_km());
  } else {
    report.results["threshold_km"] = nullptr;
    report.table += row("threshold_km", "never vanishes");
  }
  report.table += row("method", used);

  report.csv = "never_vanishes,threshold_km\n";
  report.csv += result.is_finite() ? "false," + machine_number(result.length_km()) + "\n"
                                   : std::string("true,\n");
  return report;
}

Report cmd_estimate_mu(const EstimateArgs &args) {
  Report report{.command = "estimate-mu"};
  std::vector<MeasurementPoint> points;
  if (args.input) {
    if (args.qber || args.length_km) {
      throw ValidationError("--input cannot be combined with --qber/--length");
    }
    points = read_measurement_csv(*args.input);
    report.inputs["input"] = *args.input;
  } else {
    if (!args.qber || !args.length_km) {
      throw ValidationError("estimate-mu needs --qber with --length, or --input");
    }
    points.emplace_back(*args.qber, *args.length_km);
  }

  json per_point = json::array();
  json raw_points = json::array();
  report.csv = "qber,total_length_km,mu_per_km\n";
  report.table += fmt::format("{:<14}{:<18}{}\n", "qber", "total_length_km", "mu_per_km");
  for (const auto &p : points) {
    const double mu = estimate_mu(p);
    raw_points.push_back({{"qber", p.qber()}, {"total_length_km", p.total_length_km()}});
    per_point.push_back(
        {{"qber", p.qber()}, {"total_length_km", p.total_length_km()}, {"mu_per_km", mu}});
    report.csv += fmt::format("{},{},{}\n", machine_number(p.qber()),
                              machine_number(p.total_length_km()), machine_number(mu));
    report.table += fmt::format("{:<14}{:<18}{}\n", table_number(p.qber()),
                                table_number(p.total_length_km()), table_number(mu));
  }
  if (!args.input) {
    report.inputs["points"] = raw_points;
  }

  const MuFit fit = fit_mu(points);
  const ThresholdResult threshold = threshold_depolarizing(fit.mu);
  report.results["points"] = per_point;
  report.results["fit"] = {{"mu_per_km", fit.mu}, {"rms_residual", fit.rms_residual}};
  report.table += "\n";
  report.table += row("fitted_mu_per_km", fit.mu);
  report.table += row("rms_residual", fit.rms_residual);
  if (threshold.is_finite()) {
    report.results["threshold_km"] = threshold.length_km();
    report.table += row("threshold_km", threshold.length_km());
  } else {
    report.results["threshold_km"] = nullptr;
    report.table += row("threshold_km", "never vanishes");
  }
  return report;
}

Report cmd_sweep(const SweepArgs &args) {
  Report report{.command = "sweep"};
  std::vector<ErrorDensities> curves;
  for (const auto &text : args.mu) {
    curves.push_back(parse_mu(text));
  }
  // Demo defaults: two depolarizing curves.
  const bool defaulted = curves.empty();
  if (defaulted) {
    curves = {ErrorDensities::depolarizing(8e-3), ErrorDensities::depolarizing(16e-3)};
  }

  json mu_list = json::array();
  for (const auto &mu : curves) {
    mu_list.push_back(to_json(mu));
  }
  report.inputs = {{"mu", mu_list},
                   {"mu_defaulted", defaulted},
                   {"lmax_km", args.l_max_km},
                   {"steps", args.steps}};

  json out_curves = json::array();
  report.csv = "mu1,mu2,mu3,length_km,concurrence,fidelity\n";
  report.table += fmt::format("{:<12}{:<12}{:<12}{:<14}{:<14}{}\n", "mu1", "mu2", "mu3",
                              "length_km", "concurrence", "fidelity");
  for (const auto &mu : curves) {
    const SweepTable table = sweep(mu, args.l_max_km, args.steps);
    json rows = json::array();
    for (const auto &r : table.rows) {
      rows.push_back({{"length_km", r.length_km},
                      {"concurrence", r.concurrence},
                      {"fidelity", r.fidelity_psi_plus}});
      report.csv += fmt::format("{},{},{},{},{},{}\n", machine_number(mu[0]),
                                machine_number(mu[1]), machine_number(mu[2]),
                                machine_number(r.length_km), machine_number(r.concurrence),
                                machine_number(r.fidelity_psi_plus));
      report.table += fmt::format("{:<12}{:<12}{:<12}{:<14}{:<14}{}\n", table_number(mu[0]),
                                  table_number(mu[1]), table_number(mu[2]),
                                  table_number(r.length_km), table_number(r.concurrence),
                                  table_number(r.fidelity_psi_plus));
    }
    out_curves.push_back({{"mu", to_json(mu)}, {"rows", rows}});
  }
  report.results["curves"] = out_curves;
  return report;
}

Report cmd_montecarlo(const MonteCarloArgs &args) {
  Report report{.command = "montecarlo"};
  const ErrorDensities mu = parse_mu(args.mu);
  const LinkGeometry geom(args.l1_km, args.l2_km);
  if (args.segments_per_km >= 1 && mu.total() / static_cast<double>(args.segments_per_km) > 1.0) {
    throw NumericError(fmt::format(
        "per-segment error probability {} exceeds 1; use --segments-per-km of at least {}",
        mu.total() / static_cast<double>(args.segments_per_km),
        static_cast<std::uint64_t>(std::ceil(mu.total()))));
  }
  report.inputs = {{"mu", to_json(mu)},
                   {"l1_km", geom.l1_km()},
                   {"l2_km", geom.l2_km()},
                   {"samples", args.samples},
                   {"segments_per_km", args.segments_per_km},
                   {"seed", args.seed}};

  const McEstimate estimate =
      monte_carlo_transmit(mu, geom, args.segments_per_km, args.samples, args.seed, args.threads);
  const BellDiagonal reference = transmit_at_length(mu, geom);

  json states = json::array();
  report.csv = "bell_state,count,estimate,standard_error,closed_form,z_score\n";
  report.table += fmt::format("{:<8}{:<12}{:<14}{:<14}{:<14}{}\n", "state", "count", "estimate",
                              "std_error", "closed_form", "z_score");
  for (BellState b : kBellOrder) {
    const auto i = static_cast<std::size_t>(b);
    const double diff = estimate.bell_diagonal[i] - reference[i];
    const double se = estimate.standard_errors[i];
    double z = 0.0;
    if (diff != 0.0) {
      z = se > 0.0 ? diff / se : std::copysign(INFINITY, diff);
    }
    const std::string name(bell_state_name(b));
    states.push_back({{"bell_state", name},
                      {"count", estimate.counts[i]},
                      {"estimate", estimate.bell_diagonal[i]},
                      {"standard_error", se},
                      {"closed_form", reference[i]},
                      {"z_score", z}});
    report.csv += fmt::format("{},{},{},{},{},{}\n", name, estimate.counts[i],
                              machine_number(estimate.bell_diagonal[i]), machine_number(se),
                              machine_number(reference[i]), machine_number(z));
    report.table += fmt::format("{:<8}{:<12}{:<14}{:<14}{:<14}{}\n", name, estimate.counts[i],
                                table_number(estimate.bell_diagonal[i]), table_number(se),
                                table_number(reference[i]), table_number(z));
  }
  report.results["bell_states"] = states;
  return report;
}

}  // namespace eprdist::cli
