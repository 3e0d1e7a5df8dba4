// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "emwt/channel.hpp"
#include "emwt/emwt.hpp"

namespace emwt {

struct GeometryConfig {
  double height = 50.0;  // m
  double r_min = 10.0;   // m, horizontal
  double r_max = 20.0;   // m, horizontal
  double alpha = 2.5;
  double kappa = 2.0;
  bool freeze_topology = false;  // draw UE distances once, reuse for every trial
  bool independent_dl = false;   // draw downlink fading separately from uplink
};

struct SweepSpec {
  std::vector<double> p_cir_values{40, 45, 50, 55, 60, 65, 70, 75, 80};  // mW
  std::vector<double> c_values{100, 200};                                // mW
  std::size_t trials = 10000;
};

struct SimulationConfig {
  SystemConfig system;
  GeometryConfig geometry;
  SweepSpec sweep;
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: hardware concurrency

  /// Throws InvalidArgument when any field is out of range.
  void validate() const;
};

/// One cell of a sweep, averaged over trials. Throughputs in nats.
struct SweepRow {
  double p_cir = 0.0;
  double c = 0.0;
  double mean_throughput = 0.0;
  double ci95_halfwidth = 0.0;
  double mean_budget = 0.0;
  double fraction_infeasible = 0.0;
  std::size_t nonconverged = 0;
};

/// Channel draw and EMWT outcome of a single trial.
struct TrialOutcome {
  Topology topology;
  ChannelRealization uplink;
  ChannelRealization downlink;
  EmwtResult result;
};

/// Random stream of trial `trial` in sweep cell `cell`:
/// Rng::derive(seed, {cell, trial}). A frozen topology is drawn from
/// Rng::derive(seed, {kFrozenTopologyStream}).
inline constexpr std::uint64_t kFrozenTopologyStream = 0xffffffffffffffffULL;

/// Runs one trial with the given circuit power and harvester saturation.
/// Within the trial stream the draw order is: UE distances (unless frozen),
/// uplink fading, downlink fading (only when independent_dl).
TrialOutcome run_trial(const SimulationConfig& cfg, double p_cir, double c, std::size_t cell,
                       std::size_t trial);

/// Every (p_cir, c) cell, ordered with c as the outer loop. Deterministic for
/// a given config regardless of the thread count.
std::vector<SweepRow> run_sweep(const SimulationConfig& cfg);

/// Sum with pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

/// Header plus one line per row:
/// p_cir,c,mean_throughput,ci95,mean_budget,frac_infeasible,nonconverged
/// Shortest round-trip decimal formatting, '.' separator, '\n' line endings.
/// `bits` rescales the two throughput columns from nats to bits.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool bits);

}  // namespace emwt
