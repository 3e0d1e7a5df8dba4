// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/emwt.hpp"

#include <algorithm>

#include "emwt/channel.hpp"
#include "emwt/errors.hpp"

namespace emwt {

void SystemConfig::validate() const {
  if (antennas < 1) throw InvalidArgument("system.antennas must be at least 1");
  if (!(noise_power > 0.0)) throw InvalidArgument("system.noise_power must be positive");
  if (!(phi > 0.0 && phi <= 1.0)) throw InvalidArgument("system.phi must lie in (0, 1]");
  if (!(p_cir >= 0.0)) throw InvalidArgument("system.p_cir must be non-negative");
  if (p_max.size() != weights.size()) {
    throw InvalidArgument("ue.p_max needs one entry per weight (or a single scalar)");
  }
  for (const double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("system.weights must be non-negative");
  }
  for (const double cap : p_max) {
    if (!(cap >= 0.0)) throw InvalidArgument("ue.p_max must be non-negative");
  }
}

double compute_budget(double p_out, double phi, double p_cir) {
  return std::max(0.0, phi * (p_out - p_cir));
}

EmwtResult run_emwt(const SystemConfig& cfg, const ChannelRealization& uplink,
                    const ChannelRealization& downlink) {
  cfg.validate();
  if (uplink.size() != cfg.ue_count() || downlink.size() != cfg.ue_count()) {
    throw InvalidArgument("channel realization does not match the configured UE count");
  }
  const auto n = static_cast<Eigen::Index>(cfg.antennas);
  if (cfg.ue_count() > 0 && (uplink.antennas() != n || downlink.antennas() != n)) {
    throw InvalidArgument("channel realization does not match the configured antenna count");
  }

  EmwtResult result;
  result.order = optimal_permutation(cfg.weights);
  result.beams = mrt_all(uplink, cfg.p_max);
  result.p_in = input_power(uplink, result.beams);
  result.p_out = harvest(cfg.eh, result.p_in);
  result.budget = compute_budget(result.p_out, cfg.phi, cfg.p_cir);

  result.solve = solve_power_allocation(downlink, cfg.weights, result.order, cfg.noise_power,
                                        result.budget, cfg.solver);
  result.allocation = result.solve.p;
  result.weighted_throughput = result.solve.objective;
  result.per_user_rate =
      dual_weighted_rate(result.allocation, downlink, cfg.weights, result.order, cfg.noise_power)
          .per_user;
  return result;
}

EmwtResult run_emwt(const SystemConfig& cfg, const ChannelRealization& channels) {
  return run_emwt(cfg, channels, channels);
}

}  // namespace emwt
