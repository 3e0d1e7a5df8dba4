// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "emwt/eh_model.hpp"
#include "emwt/emwt.hpp"
#include "emwt/rate.hpp"
#include "emwt/simulation.hpp"
#include "emwt/solver.hpp"

namespace emwt {

class ChannelRealization;

/// Outcome of one named consistency check. `worst` is the largest observed
/// error measure, to be compared against `threshold`.
struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double threshold = 0.0;
  std::size_t instances = 0;
  std::string detail;
};

using GradientFn = std::function<std::vector<double>(
    std::span<const double>, const ChannelRealization&, std::span<const double>,
    const Permutation&, double)>;

/// Instance counts; defaults are the release gate.
struct ValidationPlan {
  std::uint64_t seed = 1;
  std::size_t duality_instances = 200;
  std::size_t permutation_instances = 50;
  std::size_t grid2_instances = 50;
  std::size_t grid2_resolution = 500;
  std::size_t grid3_instances = 20;
  std::size_t grid3_resolution = 120;
  std::size_t gradient_instances = 100;
  std::size_t mrt_instances = 20;
  std::size_t mrt_random_beams = 1000;
  std::size_t config_permutation_instances = 5;
};

// Tolerances of the gate.
inline constexpr double kDualityTol = 1e-9;
inline constexpr double kPermutationTol = 1e-6;
inline constexpr double kGridTol = 1e-4;
inline constexpr double kKktTol = 1e-6;
inline constexpr double kGradientTol = 1e-4;
inline constexpr double kGradientStepFraction = 1e-6;

/// Per-user DPC rate sum vs the weighted log-det chain, random orders, K in 1..5, N in 1..4.
CheckResult check_duality(std::uint64_t seed, std::size_t instances);

/// Weight-sorted order vs exhaustive search over all orders, K in 2..4.
CheckResult check_permutation_optimality(std::uint64_t seed, std::size_t instances,
                                         const SolverOptions& options = {});

/// Same as above on the configured weights and geometry (K <= 5).
CheckResult check_permutation_on_config(std::uint64_t seed, std::size_t instances,
                                        const SimulationConfig& cfg);

/// Solver vs lattice optimum plus KKT certificate for K = `users` (2 or 3).
CheckResult check_solver_vs_grid(std::uint64_t seed, std::size_t users, std::size_t instances,
                                 std::size_t resolution, const SolverOptions& options = {});

/// Analytic gradient vs central finite differences of the dual objective.
CheckResult check_gradient(std::uint64_t seed, std::size_t instances,
                           const GradientFn& gradient = objective_gradient);

/// Zero output at zero input, monotone grid, saturation and midpoint.
CheckResult check_harvester_shape(const EhParams& params);

/// MRT input power against random feasible beamformer sets.
CheckResult check_mrt_dominance(std::uint64_t seed, std::size_t instances,
                                std::size_t random_beams);

/// Every check above, in a fixed order.
std::vector<CheckResult> run_validation(const ValidationPlan& plan, const SimulationConfig& cfg);

}  // namespace emwt
