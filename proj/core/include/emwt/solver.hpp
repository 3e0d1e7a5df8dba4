// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace emwt {

class ChannelRealization;
class Permutation;

/// Downlink powers in mW, indexed by original UE. Feasible when every entry
/// is non-negative and the sum stays within the budget.
using PowerAllocation = std::vector<double>;

struct SolverOptions {
  double tol = 1e-8;      // relative objective change between accepted iterates
  double kkt_tol = 1e-6;  // required kkt_residual at termination
  int max_iter = 10000;
  double armijo = 1e-4;
  double backtrack = 0.5;
  /// Called with (iteration, objective) after every accepted step.
  std::function<void(int, double)> on_accept;
};

struct SolveReport {
  PowerAllocation p;
  double objective = 0.0;  // nats
  int iterations = 0;
  double kkt_residual = 0.0;
  bool converged = false;
};

/// Slack allowed on sum(p) <= budget by feasibility checks.
double budget_slack(double budget);
bool is_feasible(std::span<const double> p, double budget);

/// Euclidean projection onto {p >= 0, sum(p) <= budget}.
PowerAllocation project_budget_simplex(std::span<const double> v, double budget);

/// First-order optimality measure for maximizing a concave function over the
/// budgeted simplex. With mu = max_m grad_m > 0 it is the largest of
///   |grad_m - mu| / mu            over coordinates with p_m > 1e-9 * budget,
///   |sum(p) - budget| / budget.
/// If mu <= 0 it is the largest |grad_m| over those active coordinates.
double kkt_residual(std::span<const double> p, std::span<const double> grad, double budget);

/// Maximizes the summation-by-parts DPC objective over the budgeted simplex
/// with projected gradient ascent.
///
/// Iterates start at budget/K on every UE and remain feasible. The first trial
/// step moves the largest gradient coordinate by `budget`; later trial steps
/// use the Barzilai-Borwein length. Each trial step is halved until the Armijo
/// condition holds, so accepted objectives never decrease. Terminates once
/// both the relative objective change and the KKT residual are within
/// tolerance, or reports converged = false.
///
/// Concavity (and therefore global optimality) needs weights non-increasing
/// along `perm`. Other orders are accepted but only yield a stationary point.
SolveReport solve_power_allocation(const ChannelRealization& channels,
                                   std::span<const double> weights, const Permutation& perm,
                                   double sigma2, double budget, const SolverOptions& options = {});

}  // namespace emwt
