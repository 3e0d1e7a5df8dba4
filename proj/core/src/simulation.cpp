// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "emwt/errors.hpp"
#include "emwt/rng.hpp"

namespace emwt {

namespace {

constexpr double kZ95 = 1.959963984540054;

struct TrialSample {
  double throughput = 0.0;
  double budget = 0.0;
  bool converged = true;
};

double mean_of(std::span<const double> v) {
  return v.empty() ? 0.0 : pairwise_sum(v) / static_cast<double>(v.size());
}

}  // namespace

void SimulationConfig::validate() const {
  system.validate();
  const GeometryConfig& g = geometry;
  if (!(g.height > 0.0)) throw InvalidArgument("topology.height must be positive");
  if (!(g.r_min >= 0.0) || !(g.r_max >= g.r_min)) {
    throw InvalidArgument("topology needs 0 <= r_min <= r_max");
  }
  if (!(g.alpha > 0.0)) throw InvalidArgument("channel.alpha must be positive");
  if (!(g.kappa >= 0.0)) throw InvalidArgument("channel.kappa must be non-negative");
  if (sweep.trials < 1) throw InvalidArgument("sweep.trials must be at least 1");
  for (const double v : sweep.p_cir_values) {
    if (!(v >= 0.0)) throw InvalidArgument("sweep.p_cir values must be non-negative");
  }
  for (const double v : sweep.c_values) {
    if (!(v > 0.0)) throw InvalidArgument("sweep.c values must be positive");
  }
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (const double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

TrialOutcome run_trial(const SimulationConfig& cfg, double p_cir, double c, std::size_t cell,
                       std::size_t trial) {
  const GeometryConfig& g = cfg.geometry;
  const std::size_t k_count = cfg.system.ue_count();
  Rng rng = Rng::derive(cfg.seed, {cell, trial});

  TrialOutcome out;
  if (g.freeze_topology) {
    Rng topo_rng = Rng::derive(cfg.seed, {kFrozenTopologyStream});
    out.topology = draw_topology(topo_rng, k_count, g.r_min, g.r_max, g.height, g.alpha, g.kappa);
  } else {
    out.topology = draw_topology(rng, k_count, g.r_min, g.r_max, g.height, g.alpha, g.kappa);
  }
  const auto n = static_cast<Eigen::Index>(cfg.system.antennas);
  out.uplink = draw_channel(rng, out.topology, n);
  out.downlink = g.independent_dl ? draw_channel(rng, out.topology, n) : out.uplink;

  SystemConfig sys = cfg.system;
  sys.p_cir = p_cir;
  sys.eh = EhParams(cfg.system.eh.a(), cfg.system.eh.b(), c);
  out.result = run_emwt(sys, out.uplink, out.downlink);
  return out;
}

std::vector<SweepRow> run_sweep(const SimulationConfig& cfg) {
  cfg.validate();
  const std::size_t trials = cfg.sweep.trials;

  struct Cell {
    double p_cir;
    double c;
  };
  std::vector<Cell> cells;
  for (const double c : cfg.sweep.c_values) {
    for (const double p_cir : cfg.sweep.p_cir_values) cells.push_back({p_cir, c});
  }

  const std::size_t total = cells.size() * trials;
  std::vector<TrialSample> samples(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        const std::size_t cell = i / trials;
        const std::size_t trial = i % trials;
        const TrialOutcome t = run_trial(cfg, cells[cell].p_cir, cells[cell].c, cell, trial);
        samples[i] = {t.result.weighted_throughput, t.result.budget, t.result.solve.converged};
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(total);
    }
  };

  std::size_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  std::vector<double> throughput(trials);
  std::vector<double> budget(trials);
  std::vector<double> infeasible(trials);
  std::vector<double> sq_dev(trials);
  for (std::size_t cell = 0; cell < cells.size(); ++cell) {
    SweepRow row;
    row.p_cir = cells[cell].p_cir;
    row.c = cells[cell].c;
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialSample& s = samples[cell * trials + t];
      throughput[t] = s.throughput;
      budget[t] = s.budget;
      infeasible[t] = s.budget > 0.0 ? 0.0 : 1.0;
      if (!s.converged) ++row.nonconverged;
    }
    row.mean_throughput = mean_of(throughput);
    row.mean_budget = mean_of(budget);
    row.fraction_infeasible = mean_of(infeasible);
    if (trials > 1) {
      for (std::size_t t = 0; t < trials; ++t) {
        const double d = throughput[t] - row.mean_throughput;
        sq_dev[t] = d * d;
      }
      const double variance = pairwise_sum(sq_dev) / static_cast<double>(trials - 1);
      row.ci95_halfwidth = kZ95 * std::sqrt(variance / static_cast<double>(trials));
    }
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool bits) {
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  out << "p_cir,c,mean_throughput,ci95,mean_budget,frac_infeasible,nonconverged\n";
  for (const SweepRow& r : rows) {
    out << fmt::format("{},{},{},{},{},{},{}\n", r.p_cir, r.c, r.mean_throughput * scale,
                       r.ci95_halfwidth * scale, r.mean_budget, r.fraction_infeasible,
                       r.nonconverged);
  }
}

}  // namespace emwt
