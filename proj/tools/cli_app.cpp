// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "emwt/config.hpp"
#include "emwt/rng.hpp"
#include "emwt/validation.hpp"

namespace emwt::cli {

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  bool bits = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-c,--config", opts.config_path, "Config file (defaults built in)");
  cmd->add_option("--set", opts.overrides, "Override a config key: section.key=value")
      ->take_all();
  cmd->add_option("--seed", opts.seed, "Random seed (overrides the config)");
}

SimulationConfig resolve(const CommonOptions& opts) {
  SimulationConfig cfg = load_config(opts.config_path, opts.overrides);
  if (opts.seed) cfg.seed = *opts.seed;
  return cfg;
}

// Writes to --out when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + path + "'");
  file << text;
}

ordered_json complex_vectors(const std::vector<Eigen::VectorXcd>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back({v[i].real(), v[i].imag()});
    arr.push_back(std::move(row));
  }
  return arr;
}

int do_simulate(const CommonOptions& opts, std::optional<std::size_t> trials,
                std::optional<std::size_t> threads, std::ostream& out, std::ostream& err) {
  SimulationConfig cfg = resolve(opts);
  if (trials) cfg.sweep.trials = *trials;
  if (threads) cfg.threads = *threads;
  cfg.validate();
  const std::vector<SweepRow> rows = run_sweep(cfg);
  std::ostringstream csv;
  write_csv(csv, rows, opts.bits);
  emit(csv.str(), opts.out_path, out);
  for (const SweepRow& r : rows) {
    if (r.nonconverged > 0) {
      err << fmt::format("warning: p_cir={} c={}: {} trial(s) did not converge\n", r.p_cir, r.c,
                         r.nonconverged);
    }
  }
  return kOk;
}

int do_single(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const SimulationConfig cfg = resolve(opts);
  const TrialOutcome trial = run_trial(cfg, cfg.system.p_cir, cfg.system.eh.c(), 0, 0);
  emit(single_json(cfg, trial, opts.bits), opts.out_path, out);
  if (!trial.result.solve.converged) err << "warning: power allocation did not converge\n";
  return kOk;
}

int do_validate(const CommonOptions& opts, ValidationPlan plan, std::ostream& out,
                std::ostream& err) {
  const SimulationConfig cfg = resolve(opts);
  plan.seed = cfg.seed;
  const std::vector<CheckResult> results = run_validation(plan, cfg);

  std::ostringstream table;
  table << fmt::format("{:<24} {:>9} {:>12} {:>12}  {:<6} {}\n", "check", "instances", "worst",
                       "threshold", "status", "detail");
  bool all = true;
  for (const CheckResult& r : results) {
    table << fmt::format("{:<24} {:>9} {:>12.4e} {:>12.4e}  {:<6} {}\n", r.name, r.instances,
                         r.worst, r.threshold, r.passed ? "PASS" : "FAIL", r.detail);
    all = all && r.passed;
  }
  emit(table.str(), opts.out_path, out);
  if (!all) {
    for (const CheckResult& r : results) {
      if (!r.passed) err << "check failed: " << r.name << "\n";
    }
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

std::string single_json(const SimulationConfig& cfg, const TrialOutcome& trial, bool bits) {
  const EmwtResult& r = trial.result;
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  std::vector<double> per_user = r.per_user_rate;
  for (double& x : per_user) x *= scale;

  ordered_json j;
  j["seed"] = cfg.seed;
  j["rng"] = Rng::kScheme;
  j["units"] = {{"power", "mW"}, {"throughput", bits ? "bits" : "nats"}};
  j["p_cir"] = cfg.system.p_cir;
  j["eh"] = {{"a", cfg.system.eh.a()}, {"b", cfg.system.eh.b()}, {"c", cfg.system.eh.c()},
             {"m", cfg.system.eh.m()}};
  j["weights"] = cfg.system.weights;
  j["p_max"] = cfg.system.p_max;
  j["horizontal_distances"] = trial.topology.ue_horizontal_distances;
  j["order"] = r.order.order();
  j["uplink_channels"] = complex_vectors(trial.uplink.vectors());
  if (cfg.geometry.independent_dl) {
    j["downlink_channels"] = complex_vectors(trial.downlink.vectors());
  }
  j["beams"] = complex_vectors(r.beams);
  j["p_in"] = r.p_in;
  j["p_out"] = r.p_out;
  j["budget"] = r.budget;
  j["allocation"] = r.allocation;
  j["weighted_throughput"] = r.weighted_throughput * scale;
  j["per_user_rate"] = per_user;
  j["solve"] = {{"iterations", r.solve.iterations},
                {"kkt_residual", r.solve.kkt_residual},
                {"converged", r.solve.converged}};
  return j.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted-throughput simulator for a UAV base station with nonlinear energy "
               "harvesting"};
  app.require_subcommand(1);

  CommonOptions sim_opts;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> threads;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo sweep over p_cir and c (CSV)");
  add_common(simulate, sim_opts);
  simulate->add_option("--trials", trials, "Trials per sweep cell");
  simulate->add_option("--threads", threads, "Worker threads (0: all cores)");
  simulate->add_option("--out", sim_opts.out_path, "Write CSV here instead of stdout");
  simulate->add_flag("--bits", sim_opts.bits, "Report throughput in bits instead of nats");

  CommonOptions single_opts;
  CLI::App* single = app.add_subcommand("single", "One trial with every intermediate (JSON)");
  add_common(single, single_opts);
  single->add_option("--out", single_opts.out_path, "Write JSON here instead of stdout");
  single->add_flag("--bits", single_opts.bits, "Report throughput in bits instead of nats");

  CommonOptions val_opts;
  ValidationPlan plan;
  CLI::App* validate = app.add_subcommand("validate", "Oracle and invariant checks (table)");
  add_common(validate, val_opts);
  validate->add_option("--out", val_opts.out_path, "Write the table here instead of stdout");
  validate->add_option("--duality", plan.duality_instances, "Duality-identity instances");
  validate->add_option("--permutation", plan.permutation_instances,
                       "Permutation-enumeration instances");
  validate->add_option("--config-permutation", plan.config_permutation_instances,
                       "Permutation-enumeration instances on the configured system");
  validate->add_option("--grid2", plan.grid2_instances, "K=2 grid-oracle instances");
  validate->add_option("--grid2-resolution", plan.grid2_resolution, "K=2 lattice resolution");
  validate->add_option("--grid3", plan.grid3_instances, "K=3 grid-oracle instances");
  validate->add_option("--grid3-resolution", plan.grid3_resolution, "K=3 lattice resolution");
  validate->add_option("--gradient", plan.gradient_instances, "Finite-difference instances");
  validate->add_option("--mrt", plan.mrt_instances, "MRT-dominance instances");
  validate->add_option("--mrt-beams", plan.mrt_random_beams, "Random beam sets per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*simulate) return do_simulate(sim_opts, trials, threads, out, err);
    if (*single) return do_single(single_opts, out, err);
    return do_validate(val_opts, plan, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace emwt::cli
