// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "emwt/channel.hpp"
#include "emwt/errors.hpp"
#include "emwt/rate.hpp"

namespace emwt {

namespace {

constexpr double kActiveFraction = 1e-9;
constexpr int kMaxBacktracks = 60;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double budget_slack(double budget) { return 1e-9 * std::max(budget, 1.0); }

bool is_feasible(std::span<const double> p, double budget) {
  double sum = 0.0;
  for (const double x : p) {
    if (!(x >= 0.0)) return false;
    sum += x;
  }
  return sum <= budget + budget_slack(budget);
}

PowerAllocation project_budget_simplex(std::span<const double> v, double budget) {
  if (!(budget >= 0.0)) throw InvalidArgument("power budget must be non-negative");
  PowerAllocation clipped(v.size());
  std::transform(v.begin(), v.end(), clipped.begin(), [](double x) { return std::max(x, 0.0); });
  if (std::accumulate(clipped.begin(), clipped.end(), 0.0) <= budget) return clipped;

  // Sort-and-threshold projection onto {p >= 0, sum(p) = budget}.
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double prefix = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    prefix += u[j];
    const double candidate = (prefix - budget) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) theta = candidate;
  }
  PowerAllocation p(v.size());
  std::transform(v.begin(), v.end(), p.begin(),
                 [theta](double x) { return std::max(x - theta, 0.0); });
  return p;
}

double kkt_residual(std::span<const double> p, std::span<const double> grad, double budget) {
  if (p.empty()) return 0.0;
  const double active = kActiveFraction * budget;
  const double mu = *std::max_element(grad.begin(), grad.end());
  double residual = 0.0;
  if (mu <= 0.0) {
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (p[m] > active) residual = std::max(residual, std::abs(grad[m]));
    }
    return residual;
  }
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] > active) residual = std::max(residual, std::abs(grad[m] - mu) / mu);
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (budget > 0.0) residual = std::max(residual, std::abs(total - budget) / budget);
  return residual;
}

SolveReport solve_power_allocation(const ChannelRealization& channels,
                                   std::span<const double> weights, const Permutation& perm,
                                   double sigma2, double budget, const SolverOptions& options) {
  if (!(budget >= 0.0)) throw InvalidArgument("power budget must be non-negative");
  if (options.max_iter < 0 || !(options.backtrack > 0.0 && options.backtrack < 1.0)) {
    throw InvalidArgument("invalid solver options");
  }
  DualObjective objective(channels, weights, perm, sigma2);
  const std::size_t k_count = objective.size();

  SolveReport report;
  if (k_count == 0 || budget == 0.0) {
    report.p.assign(k_count, 0.0);
    report.converged = true;
    return report;
  }

  PowerAllocation p(k_count, budget / static_cast<double>(k_count));
  std::vector<double> grad;
  double f = objective.value_and_gradient(p, grad);

  PowerAllocation trial(k_count);
  PowerAllocation candidate;
  std::vector<double> trial_grad;
  std::vector<double> step_vec(k_count);

  const double grad_scale = max_abs(grad);
  double step = grad_scale > 0.0 ? budget / grad_scale : 1.0;
  double rel_change = std::numeric_limits<double>::infinity();
  double kkt = kkt_residual(p, grad, budget);

  int it = 0;
  for (; it < options.max_iter; ++it) {
    if (rel_change <= options.tol && kkt <= options.kkt_tol) break;

    bool accepted = false;
    double t = step;
    double f_new = f;
    for (int bt = 0; bt < kMaxBacktracks; ++bt, t *= options.backtrack) {
      for (std::size_t m = 0; m < k_count; ++m) trial[m] = p[m] + t * grad[m];
      candidate = project_budget_simplex(trial, budget);
      for (std::size_t m = 0; m < k_count; ++m) step_vec[m] = candidate[m] - p[m];
      const double ascent = dot(grad, step_vec);
      if (!(ascent > 0.0)) break;  // projected step vanished: stationary to rounding
      f_new = objective.value(candidate);
      if (f_new >= f + options.armijo * ascent) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    const double f_old = f;
    f = objective.value_and_gradient(candidate, trial_grad);
    // Barzilai-Borwein length for ascent on a concave function: s.s / (-s.y).
    double ss = 0.0;
    double sy = 0.0;
    for (std::size_t m = 0; m < k_count; ++m) {
      ss += step_vec[m] * step_vec[m];
      sy += step_vec[m] * (trial_grad[m] - grad[m]);
    }
    step = sy < 0.0 ? ss / -sy : 2.0 * t;
    step = std::clamp(step, 1e-30, 1e30);

    rel_change = std::abs(f - f_old) / std::max(std::abs(f), std::numeric_limits<double>::min());
    p.swap(candidate);
    grad.swap(trial_grad);
    kkt = kkt_residual(p, grad, budget);
    if (options.on_accept) options.on_accept(it + 1, f);
  }

  report.p = std::move(p);
  report.objective = f;
  report.iterations = it;
  report.kkt_residual = kkt;
  report.converged = kkt <= options.kkt_tol &&
                     (rel_change <= options.tol || it < options.max_iter);
  return report;
}

}  // namespace emwt
