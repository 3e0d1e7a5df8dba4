// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/beamform.hpp"

#include <cmath>

#include "emwt/channel.hpp"
#include "emwt/errors.hpp"

namespace emwt {

Eigen::VectorXcd mrt(const Eigen::VectorXcd& h, double p_max) {
  if (!(p_max >= 0.0)) throw InvalidArgument("power cap must be non-negative");
  const double norm = h.norm();
  if (!(norm > 0.0)) throw ZeroChannelError("cannot steer MRT along a zero channel");
  return (std::sqrt(p_max) / norm) * h;
}

BeamformerSet mrt_all(const ChannelRealization& channels, std::span<const double> p_max) {
  if (p_max.size() != channels.size()) {
    throw InvalidArgument("power cap count does not match the number of UEs");
  }
  BeamformerSet beams;
  beams.reserve(channels.size());
  for (std::size_t k = 0; k < channels.size(); ++k) {
    try {
      beams.push_back(mrt(channels.vector(k), p_max[k]));
    } catch (const ZeroChannelError&) {
      beams.push_back(Eigen::VectorXcd::Zero(channels.antennas()));
    }
  }
  return beams;
}

double input_power(const ChannelRealization& channels, const BeamformerSet& beams) {
  if (beams.size() != channels.size()) {
    throw InvalidArgument("beamformer count does not match the number of UEs");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < beams.size(); ++k) {
    if (beams[k].size() != channels.antennas()) {
      throw InvalidArgument("beamformer length does not match the antenna count");
    }
    total += std::norm(channels.vector(k).dot(beams[k]));
  }
  return total;
}

}  // namespace emwt
