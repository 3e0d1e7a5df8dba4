// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace emwt {

class ChannelRealization;

/// Uplink energy beamformers, one complex vector per UE (sqrt(mW) units).
/// Not to be confused with the throughput weights of SystemConfig.
using BeamformerSet = std::vector<Eigen::VectorXcd>;

/// Maximal ratio transmission: sqrt(p_max) * h / |h|.
/// Throws ZeroChannelError for an all-zero h, InvalidArgument for p_max < 0.
Eigen::VectorXcd mrt(const Eigen::VectorXcd& h, double p_max);

/// MRT beam for every UE at its cap. UEs with an all-zero channel get a zero
/// beamformer instead of an error.
BeamformerSet mrt_all(const ChannelRealization& channels, std::span<const double> p_max);

/// RF power at the UAV: sum_k |h_k^H w_k|^2 (receiver noise ignored).
double input_power(const ChannelRealization& channels, const BeamformerSet& beams);

}  // namespace emwt
