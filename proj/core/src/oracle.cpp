// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "emwt/channel.hpp"
#include "emwt/errors.hpp"
#include "emwt/rng.hpp"

namespace emwt {

GridResult grid_search(const ChannelRealization& channels, std::span<const double> weights,
                       const Permutation& perm, double sigma2, const GridSpec& grid) {
  const std::size_t k_count = channels.size();
  if (k_count > kGridMaxUsers) {
    throw UnsupportedSizeError("grid_search supports at most " + std::to_string(kGridMaxUsers) +
                               " UEs");
  }
  if (grid.resolution < 2) throw InvalidArgument("grid resolution must be at least 2");
  if (!(grid.budget >= 0.0)) throw InvalidArgument("power budget must be non-negative");

  DualObjective objective(channels, weights, perm, sigma2);
  const std::size_t steps = grid.resolution - 1;
  const double delta = grid.budget / static_cast<double>(steps);

  GridResult best;
  best.p.assign(k_count, 0.0);
  best.objective = objective.value(best.p);

  std::vector<std::size_t> idx(k_count, 0);
  PowerAllocation p(k_count, 0.0);
  // Odometer over index vectors with sum(idx) <= steps, in lexicographic order.
  while (true) {
    std::size_t pos = k_count;
    std::size_t used = std::accumulate(idx.begin(), idx.end(), std::size_t{0});
    while (pos > 0) {
      --pos;
      if (used < steps) {
        ++idx[pos];
        break;
      }
      used -= idx[pos];
      idx[pos] = 0;
      if (pos == 0) return best;
    }
    if (k_count == 0) return best;
    for (std::size_t k = 0; k < k_count; ++k) p[k] = delta * static_cast<double>(idx[k]);
    const double value = objective.value(p);
    if (value > best.objective) {
      best.objective = value;
      best.p = p;
    }
  }
}

PermutationResult best_permutation_exhaustive(const ChannelRealization& channels,
                                              std::span<const double> weights, double sigma2,
                                              double budget, const SolverOptions& options) {
  const std::size_t k_count = channels.size();
  if (k_count > kEnumerationMaxUsers) {
    throw UnsupportedSizeError("best_permutation_exhaustive supports at most " +
                               std::to_string(kEnumerationMaxUsers) + " UEs");
  }
  std::vector<std::size_t> order(k_count);
  std::iota(order.begin(), order.end(), std::size_t{0});

  PermutationResult best;
  bool first = true;
  do {
    const Permutation perm(order);
    const SolveReport report =
        solve_power_allocation(channels, weights, perm, sigma2, budget, options);
    const double value = dpc_weighted_rate(report.p, channels, weights, perm, sigma2).value;
    if (first || value > best.objective) {
      best.order = perm;
      best.objective = value;
      first = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<PowerAllocation> random_feasible_allocations(Rng& rng, std::size_t size,
                                                         double budget, std::size_t count) {
  if (!(budget >= 0.0)) throw InvalidArgument("power budget must be non-negative");
  std::vector<PowerAllocation> out;
  out.reserve(count);
  std::vector<double> cells(size + 1);
  for (std::size_t i = 0; i < count; ++i) {
    for (double& e : cells) e = rng.exponential();
    const double total = std::accumulate(cells.begin(), cells.end(), 0.0);
    PowerAllocation p(size);
    for (std::size_t k = 0; k < size; ++k) p[k] = budget * cells[k] / total;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace emwt
