// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "emwt/beamform.hpp"
#include "emwt/eh_model.hpp"
#include "emwt/rate.hpp"
#include "emwt/solver.hpp"

namespace emwt {

class ChannelRealization;

/// Link-level parameters of one UAV cell. Powers in mW.
struct SystemConfig {
  std::size_t antennas = 3;     // N, per UE
  double noise_power = 0.001;   // sigma^2
  double phi = 0.8;             // downlink amplifier efficiency, (0, 1]
  double p_cir = 40.0;          // UAV circuit power
  std::vector<double> p_max{200.0, 200.0, 200.0, 200.0, 200.0};
  std::vector<double> weights{0.3, 0.25, 0.2, 0.15, 0.1};
  EhParams eh{6400.0, 0.003, 200.0};
  SolverOptions solver;

  std::size_t ue_count() const noexcept { return weights.size(); }
  /// Throws InvalidArgument when any invariant is violated.
  void validate() const;
};

struct EmwtResult {
  Permutation order = Permutation::identity(0);
  BeamformerSet beams;
  double p_in = 0.0;    // RF power reaching the harvester
  double p_out = 0.0;   // harvested DC power
  double budget = 0.0;  // total downlink transmit power available
  PowerAllocation allocation;
  double weighted_throughput = 0.0;  // nats
  std::vector<double> per_user_rate;  // nats, original UE order
  SolveReport solve;
};

/// Downlink transmit power left after circuit consumption and amplifier loss:
/// max(0, phi * (p_out - p_cir)).
double compute_budget(double p_out, double phi, double p_cir);

/// Full pipeline for one channel realization: encoding order from the weights,
/// full-power MRT uplink, harvested power, budget, optimal downlink powers.
/// Solver non-convergence is reported through `solve.converged`.
EmwtResult run_emwt(const SystemConfig& cfg, const ChannelRealization& uplink,
                    const ChannelRealization& downlink);

/// Reciprocal channel: the same vectors serve uplink and downlink.
EmwtResult run_emwt(const SystemConfig& cfg, const ChannelRealization& channels);

}  // namespace emwt
