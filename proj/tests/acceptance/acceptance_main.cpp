// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

// Release gate. Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "emwt/simulation.hpp"
#include "emwt/validation.hpp"

namespace {

using emwt::CheckResult;

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome from_checks(std::initializer_list<CheckResult> checks) {
  Outcome o{true, ""};
  for (const CheckResult& c : checks) {
    o.passed = o.passed && c.passed;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += fmt::format("{}: worst {:.3e} vs {:.1e} over {} ({})", c.name, c.worst,
                            c.threshold, c.instances, c.detail);
  }
  return o;
}

Outcome throughput_trend() {
  const emwt::SimulationConfig cfg;  // defaults: reference setup, 10^4 trials per cell
  const auto rows = emwt::run_sweep(cfg);
  Outcome o{true, ""};
  for (const double c : {100.0, 200.0}) {
    std::vector<const emwt::SweepRow*> series;
    for (const auto& r : rows) {
      if (r.c == c) series.push_back(&r);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < series.size(); ++i) {
      if (series[i]->mean_throughput > series[i - 1]->mean_throughput) monotone = false;
    }
    const double first = series.front()->mean_throughput;
    const double last = series.back()->mean_throughput;
    const double drop = (first - last) / first;
    const double lo = c == 100.0 ? 0.35 : 0.05;
    const double hi = c == 100.0 ? 0.56 : 0.18;
    const bool in_band = drop >= lo && drop <= hi;
    o.passed = o.passed && monotone && in_band && series.front()->p_cir == 40.0 &&
               series.back()->p_cir == 80.0;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += fmt::format("c={}: {:.4f} -> {:.4f} nats, drop {:.2f}% in [{:g}%, {:g}%], monotone={}",
                            c, first, last, 100.0 * drop, 100.0 * lo, 100.0 * hi, monotone);
  }
  return o;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  emwt::SimulationConfig cfg;
  cfg.seed = 2026;
  cfg.sweep.trials = 500;
  std::ostringstream a;
  std::ostringstream b;
  emwt::write_csv(a, emwt::run_sweep(cfg), false);
  cfg.threads = 1;
  emwt::write_csv(b, emwt::run_sweep(cfg), false);
  bool same = a.str() == b.str();
  std::string detail = fmt::format("in-process {} bytes identical={}", a.str().size(), same);

  const auto dir = std::filesystem::temp_directory_path();
  const auto pid = std::to_string(std::chrono::steady_clock::now().time_since_epoch().count());
  const auto f1 = dir / ("emwt_acc_a_" + pid + ".csv");
  const auto f2 = dir / ("emwt_acc_b_" + pid + ".csv");
  const std::string base = fmt::format("\"{}\" simulate --seed 2026 --trials 500 --out ", EMWT_CLI_PATH);
  const int r1 = std::system((base + "\"" + f1.string() + "\"").c_str());
  const int r2 = std::system((base + "\"" + f2.string() + "\"").c_str());
  const std::string c1 = read_file(f1);
  const std::string c2 = read_file(f2);
  const bool cli_same = r1 == 0 && r2 == 0 && !c1.empty() && c1 == c2;
  same = same && cli_same && c1 == a.str();
  detail += fmt::format("; cli exit {}/{}, {} bytes identical={}, matches in-process={}", r1, r2,
                        c1.size(), c1 == c2, c1 == a.str());
  std::filesystem::remove(f1);
  std::filesystem::remove(f2);
  return {same, detail};
}

}  // namespace

int main() {
  const emwt::ValidationPlan plan;  // gate counts
  const emwt::SimulationConfig defaults;
  struct Criterion {
    const char* name;
    Outcome (*run)(const emwt::ValidationPlan&, const emwt::SimulationConfig&);
  };
  const std::vector<Criterion> criteria{
      {"AC1 duality identity",
       [](const auto& p, const auto&) {
         return from_checks({emwt::check_duality(p.seed, p.duality_instances)});
       }},
      {"AC2 permutation optimality",
       [](const auto& p, const auto& cfg) {
         return from_checks({emwt::check_permutation_optimality(p.seed, p.permutation_instances,
                                                                cfg.system.solver),
                             emwt::check_permutation_on_config(
                                 p.seed, p.config_permutation_instances, cfg)});
       }},
      {"AC3 solver vs lattice oracle",
       [](const auto& p, const auto& cfg) {
         return from_checks(
             {emwt::check_solver_vs_grid(p.seed, 2, p.grid2_instances, p.grid2_resolution,
                                         cfg.system.solver),
              emwt::check_solver_vs_grid(p.seed, 3, p.grid3_instances, p.grid3_resolution,
                                         cfg.system.solver)});
       }},
      {"AC4 gradient vs finite differences",
       [](const auto& p, const auto&) {
         return from_checks({emwt::check_gradient(p.seed, p.gradient_instances)});
       }},
      {"AC5 harvester shape",
       [](const auto&, const auto& cfg) {
         return from_checks({emwt::check_harvester_shape(cfg.system.eh)});
       }},
      {"AC6 MRT dominance",
       [](const auto& p, const auto&) {
         return from_checks({emwt::check_mrt_dominance(p.seed, p.mrt_instances,
                                                       p.mrt_random_beams)});
       }},
      {"AC7 throughput trend vs circuit power",
       [](const auto&, const auto&) { return throughput_trend(); }},
      {"AC8 byte-identical simulate output",
       [](const auto&, const auto&) { return determinism(); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run(plan, defaults);
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << fmt::format("[{}] {} ({:.1f} s): {}\n", o.passed ? "PASS" : "FAIL", c.name, secs,
                             o.detail)
              << std::flush;
    if (!o.passed) ++failed;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
