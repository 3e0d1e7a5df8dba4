// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/validation.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "emwt/beamform.hpp"
#include "emwt/channel.hpp"
#include "emwt/errors.hpp"
#include "emwt/oracle.hpp"
#include "emwt/rng.hpp"

namespace emwt {

namespace {

// Check streams are keyed by a per-check tag so the checks stay independent.
enum class Stream : std::uint64_t {
  kDuality = 1,
  kPermutation,
  kPermutationConfig,
  kGrid2,
  kGrid3,
  kGradient,
  kMrt,
};

Rng stream(std::uint64_t seed, Stream s, std::size_t instance) {
  return Rng::derive(seed, {static_cast<std::uint64_t>(s), instance});
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  const auto span = static_cast<double>(hi - lo + 1);
  return std::min(hi, lo + static_cast<std::size_t>(rng.uniform() * span));
}

double log_uniform(Rng& rng, double lo_exp, double hi_exp) {
  return std::pow(10.0, rng.uniform(lo_exp, hi_exp));
}

ChannelRealization random_channels(Rng& rng, std::size_t users, Eigen::Index antennas) {
  std::vector<Eigen::VectorXcd> h;
  for (std::size_t k = 0; k < users; ++k) {
    const double scale = std::sqrt(log_uniform(rng, -1.0, 1.0));
    Eigen::VectorXcd v(antennas);
    for (Eigen::Index i = 0; i < antennas; ++i) v[i] = scale * rng.complex_normal();
    h.push_back(std::move(v));
  }
  return ChannelRealization(std::move(h));
}

std::vector<double> random_weights(Rng& rng, std::size_t users) {
  std::vector<double> w(users);
  for (double& x : w) x = rng.uniform(0.05, 1.0);
  return w;
}

Permutation random_permutation(Rng& rng, std::size_t users) {
  std::vector<std::size_t> order(users);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = users; i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng, 0, i - 1)]);
  return Permutation(std::move(order));
}

CheckResult finish(CheckResult r) {
  r.passed = r.passed && r.worst <= r.threshold;
  return r;
}

}  // namespace

CheckResult check_duality(std::uint64_t seed, std::size_t instances) {
  CheckResult r{"duality-identity", true, 0.0, kDualityTol, instances, ""};
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = stream(seed, Stream::kDuality, i);
    const std::size_t users = uniform_index(rng, 1, 5);
    const auto antennas = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
    const ChannelRealization ch = random_channels(rng, users, antennas);
    const std::vector<double> w = random_weights(rng, users);
    const Permutation perm = random_permutation(rng, users);
    const double budget = log_uniform(rng, -1.0, 2.0);
    std::vector<double> p(users);
    for (double& x : p) x = rng.uniform(0.0, budget);

    const double dpc = dpc_weighted_rate(p, ch, w, perm, 1.0).value;
    const double dual = dual_weighted_rate(p, ch, w, perm, 1.0).value;
    r.worst = std::max(r.worst, std::abs(dpc - dual) / std::max(std::abs(dual), 1e-12));
  }
  r.detail = fmt::format("max relative gap {:.3e}", r.worst);
  return finish(r);
}

CheckResult check_permutation_optimality(std::uint64_t seed, std::size_t instances,
                                         const SolverOptions& options) {
  CheckResult r{"permutation-enumeration", true, 0.0, kPermutationTol, instances, ""};
  std::size_t nonconverged = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = stream(seed, Stream::kPermutation, i);
    const std::size_t users = uniform_index(rng, 2, 4);
    const auto antennas = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
    const ChannelRealization ch = random_channels(rng, users, antennas);
    const std::vector<double> w = random_weights(rng, users);
    const double budget = log_uniform(rng, -1.0, 2.0);

    const SolveReport sorted =
        solve_power_allocation(ch, w, optimal_permutation(w), 1.0, budget, options);
    if (!sorted.converged) ++nonconverged;
    const PermutationResult best = best_permutation_exhaustive(ch, w, 1.0, budget, options);
    r.worst = std::max(r.worst, (best.objective - sorted.objective) /
                                    std::max(std::abs(sorted.objective), 1e-12));
  }
  r.passed = nonconverged == 0;
  r.detail = fmt::format("max relative excess of best order {:.3e}, {} non-converged", r.worst,
                         nonconverged);
  return finish(r);
}

CheckResult check_permutation_on_config(std::uint64_t seed, std::size_t instances,
                                        const SimulationConfig& cfg) {
  CheckResult r{"permutation-config", true, 0.0, kPermutationTol, instances, ""};
  const SystemConfig& sys = cfg.system;
  const GeometryConfig& g = cfg.geometry;
  if (sys.ue_count() > kEnumerationMaxUsers) {
    r.passed = false;
    r.detail = fmt::format("configured K = {} exceeds the enumeration limit", sys.ue_count());
    return r;
  }
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = stream(seed, Stream::kPermutationConfig, i);
    const Topology topo =
        draw_topology(rng, sys.ue_count(), g.r_min, g.r_max, g.height, g.alpha, g.kappa);
    const ChannelRealization ch =
        draw_channel(rng, topo, static_cast<Eigen::Index>(sys.antennas));
    const double budget = compute_budget(max_harvest(sys.eh, sys.p_max, ch), sys.phi, sys.p_cir);
    const SolveReport sorted = solve_power_allocation(ch, sys.weights, optimal_permutation(sys.weights),
                                                      sys.noise_power, budget, sys.solver);
    if (!sorted.converged) r.passed = false;
    const PermutationResult best =
        best_permutation_exhaustive(ch, sys.weights, sys.noise_power, budget, sys.solver);
    r.worst = std::max(r.worst, (best.objective - sorted.objective) /
                                    std::max(std::abs(sorted.objective), 1e-12));
  }
  r.detail = fmt::format("K = {}, max relative excess of best order {:.3e}", sys.ue_count(),
                         r.worst);
  return finish(r);
}

CheckResult check_solver_vs_grid(std::uint64_t seed, std::size_t users, std::size_t instances,
                                 std::size_t resolution, const SolverOptions& options) {
  CheckResult r{fmt::format("grid-oracle-k{}", users), true, 0.0, kGridTol, instances, ""};
  double worst_kkt = 0.0;
  std::size_t nonconverged = 0;
  const Stream tag = users == 2 ? Stream::kGrid2 : Stream::kGrid3;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = stream(seed, tag, i);
    const auto antennas = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
    const ChannelRealization ch = random_channels(rng, users, antennas);
    std::vector<double> w = random_weights(rng, users);
    const double budget = log_uniform(rng, -1.0, 2.0);
    const Permutation perm = optimal_permutation(w);

    const SolveReport report = solve_power_allocation(ch, w, perm, 1.0, budget, options);
    const GridResult lattice = grid_search(ch, w, perm, 1.0, {resolution, budget});
    r.worst = std::max(r.worst, (lattice.objective - report.objective) /
                                    std::max(std::abs(lattice.objective), 1e-12));
    worst_kkt = std::max(worst_kkt, report.kkt_residual);
    if (!report.converged) ++nonconverged;
  }
  r.passed = worst_kkt <= kKktTol && nonconverged == 0;
  r.detail = fmt::format("resolution {}, max lattice excess {:.3e}, max KKT residual {:.3e}",
                         resolution, r.worst, worst_kkt);
  return finish(r);
}

CheckResult check_gradient(std::uint64_t seed, std::size_t instances, const GradientFn& gradient) {
  CheckResult r{"fd-gradient", true, 0.0, kGradientTol, instances, ""};
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = stream(seed, Stream::kGradient, i);
    const std::size_t users = uniform_index(rng, 1, 5);
    const auto antennas = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
    const ChannelRealization ch = random_channels(rng, users, antennas);
    const std::vector<double> w = random_weights(rng, users);
    const Permutation perm = optimal_permutation(w);
    const double budget = log_uniform(rng, -1.0, 2.0);
    std::vector<double> p(users);
    for (double& x : p) x = budget * rng.uniform(0.1, 1.0) / static_cast<double>(users);

    const std::vector<double> g = gradient(p, ch, w, perm, 1.0);
    const double h = kGradientStepFraction * budget;
    for (std::size_t m = 0; m < users; ++m) {
      std::vector<double> up = p;
      std::vector<double> down = p;
      up[m] += h;
      down[m] -= h;
      const double fd = (dual_weighted_rate(up, ch, w, perm, 1.0).value -
                         dual_weighted_rate(down, ch, w, perm, 1.0).value) /
                        (2.0 * h);
      r.worst = std::max(r.worst, std::abs(g.at(m) - fd) / std::max(std::abs(fd), 1e-300));
    }
  }
  r.detail = fmt::format("max relative component error {:.3e}", r.worst);
  return finish(r);
}

CheckResult check_harvester_shape(const EhParams& params) {
  CheckResult r{"harvester-shape", true, 0.0, 0.0, 1, ""};
  const double c = params.c();
  const double b = params.b();
  const double m = params.m();

  const double at_zero = harvest(params, 0.0);
  const bool zero_ok = std::abs(at_zero) <= 1e-9 * c;

  bool monotone = true;
  constexpr int kPoints = 10000;
  double previous = at_zero;
  for (int i = 1; i < kPoints; ++i) {
    const double x = 100.0 * b * static_cast<double>(i) / (kPoints - 1);
    const double y = harvest(params, x);
    if (y < previous) monotone = false;
    previous = y;
  }
  const bool saturates = harvest(params, 1e6 * b) >= 0.999 * c;
  const bool midpoint = harvest(params, b) == c * (0.5 - m) / (1.0 - m);

  r.passed = zero_ok && monotone && saturates && midpoint;
  r.detail = fmt::format("harvest(0) = {:.3e}, monotone = {}, saturation = {}, midpoint = {}",
                         at_zero, monotone, saturates, midpoint);
  return r;
}

CheckResult check_mrt_dominance(std::uint64_t seed, std::size_t instances,
                                std::size_t random_beams) {
  constexpr double kSlack = 1e-12;
  CheckResult r{"mrt-dominance", true, 0.0, 1.0 + kSlack, instances, ""};
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng = stream(seed, Stream::kMrt, i);
    const std::size_t users = uniform_index(rng, 1, 5);
    const auto antennas = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
    const ChannelRealization ch = random_channels(rng, users, antennas);
    std::vector<double> caps(users);
    for (double& x : caps) x = rng.uniform(1.0, 200.0);

    const double best = input_power(ch, mrt_all(ch, caps));
    for (std::size_t j = 0; j < random_beams; ++j) {
      BeamformerSet beams;
      for (std::size_t k = 0; k < users; ++k) {
        Eigen::VectorXcd v(antennas);
        for (Eigen::Index a = 0; a < antennas; ++a) v[a] = rng.complex_normal();
        v *= std::sqrt(caps[k] * rng.uniform()) / v.norm();
        beams.push_back(std::move(v));
      }
      r.worst = std::max(r.worst, input_power(ch, beams) / best);
    }
  }
  r.detail = fmt::format("max random/MRT input power ratio {:.6f}", r.worst);
  return finish(r);
}

std::vector<CheckResult> run_validation(const ValidationPlan& plan, const SimulationConfig& cfg) {
  std::vector<CheckResult> out;
  const SolverOptions& solver = cfg.system.solver;
  out.push_back(check_duality(plan.seed, plan.duality_instances));
  out.push_back(check_permutation_optimality(plan.seed, plan.permutation_instances, solver));
  out.push_back(check_permutation_on_config(plan.seed, plan.config_permutation_instances, cfg));
  out.push_back(check_solver_vs_grid(plan.seed, 2, plan.grid2_instances, plan.grid2_resolution,
                                     solver));
  out.push_back(check_solver_vs_grid(plan.seed, 3, plan.grid3_instances, plan.grid3_resolution,
                                     solver));
  out.push_back(check_gradient(plan.seed, plan.gradient_instances));
  out.push_back(check_harvester_shape(cfg.system.eh));
  out.push_back(check_mrt_dominance(plan.seed, plan.mrt_instances, plan.mrt_random_beams));
  return out;
}

}  // namespace emwt
