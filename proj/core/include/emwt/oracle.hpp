// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "emwt/rate.hpp"
#include "emwt/solver.hpp"

namespace emwt {

class ChannelRealization;
class Rng;

// Brute-force references for the analytical pipeline. They exist to be slow
// and obviously correct; sizes beyond the hard limits are refused.

inline constexpr std::size_t kGridMaxUsers = 3;
inline constexpr std::size_t kEnumerationMaxUsers = 5;

struct GridSpec {
  std::size_t resolution = 100;  // lattice points per axis, >= 2
  double budget = 0.0;           // mW
};

struct GridResult {
  PowerAllocation p;
  double objective = 0.0;
};

/// Evaluates the dual objective on every lattice point
/// {p : p_k in {0, d, 2d, ...}, sum(p) <= budget}, d = budget / (resolution - 1),
/// and returns the best one. Ties keep the lexicographically smallest point.
GridResult grid_search(const ChannelRealization& channels, std::span<const double> weights,
                       const Permutation& perm, double sigma2, const GridSpec& grid);

struct PermutationResult {
  Permutation order = Permutation::identity(0);
  double objective = 0.0;
};

/// Solves the power allocation for each of the K! encoding orders, scores
/// each solution with the DPC (non-dual) rate, and returns the best order.
/// Ties keep the lexicographically smallest order.
PermutationResult best_permutation_exhaustive(const ChannelRealization& channels,
                                              std::span<const double> weights, double sigma2,
                                              double budget, const SolverOptions& options = {});

/// Points drawn uniformly from {p >= 0, sum(p) <= budget} in R^size, using
/// normalized exponential spacings over size + 1 cells (the last cell is the
/// unused slack). E[sum(p)] = budget * size / (size + 1).
std::vector<PowerAllocation> random_feasible_allocations(Rng& rng, std::size_t size,
                                                         double budget, std::size_t count);

}  // namespace emwt
