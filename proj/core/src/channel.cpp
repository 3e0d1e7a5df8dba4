// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/channel.hpp"

#include <cmath>

#include "emwt/errors.hpp"
#include "emwt/rng.hpp"

namespace emwt {

void Topology::validate() const {
  if (!(uav_height > 0.0)) throw InvalidArgument("UAV height must be positive");
  if (!(pathloss_exponent > 0.0)) throw InvalidArgument("pathloss exponent must be positive");
  if (!(rician_kappa >= 0.0)) throw InvalidArgument("Rician factor must be non-negative");
  for (const double r : ue_horizontal_distances) {
    if (!(r >= 0.0)) throw InvalidArgument("horizontal UE distances must be non-negative");
  }
}

ChannelRealization::ChannelRealization(std::vector<Eigen::VectorXcd> h) : h_(std::move(h)) {
  if (!h_.empty()) antennas_ = h_.front().size();
  outer_.reserve(h_.size());
  gain_.reserve(h_.size());
  for (const auto& v : h_) {
    if (v.size() != antennas_ || antennas_ < 1) {
      throw InvalidArgument("channel vectors must share one non-zero length");
    }
    outer_.push_back(v * v.adjoint());
    gain_.push_back(v.squaredNorm());
  }
}

double link_distance(double height, double horizontal) {
  if (!(height > 0.0) || !(horizontal >= 0.0)) {
    throw InvalidArgument("link_distance needs height > 0 and horizontal >= 0");
  }
  return std::hypot(height, horizontal);
}

double pathloss_gain(double distance, double alpha) {
  if (!(distance > 0.0)) throw InvalidArgument("link distance must be positive");
  return std::pow(distance, -alpha);
}

ChannelRealization draw_channel(Rng& rng, const Topology& topology, Eigen::Index n_antennas) {
  if (n_antennas < 1) throw InvalidArgument("need at least one antenna per UE");
  topology.validate();

  const double kappa = topology.rician_kappa;
  const bool los_only = std::isinf(kappa);
  const double los_amp = los_only ? 1.0 : std::sqrt(kappa / (kappa + 1.0));
  const double nlos_amp = los_only ? 0.0 : std::sqrt(1.0 / (kappa + 1.0));

  std::vector<Eigen::VectorXcd> h;
  h.reserve(topology.size());
  for (const double r : topology.ue_horizontal_distances) {
    const double d = link_distance(topology.uav_height, r);
    const double scale = std::sqrt(pathloss_gain(d, topology.pathloss_exponent));
    Eigen::VectorXcd v(n_antennas);
    for (Eigen::Index i = 0; i < n_antennas; ++i) {
      std::complex<double> g{0.0, 0.0};
      if (!los_only) g = rng.complex_normal();
      v[i] = scale * (los_amp + nlos_amp * g);
    }
    h.push_back(std::move(v));
  }
  return ChannelRealization(std::move(h));
}

Topology draw_topology(Rng& rng, std::size_t count, double r_min, double r_max, double height,
                       double alpha, double kappa) {
  if (!(r_min >= 0.0) || !(r_max >= r_min)) {
    throw InvalidArgument("draw_topology needs 0 <= r_min <= r_max");
  }
  Topology topo;
  topo.uav_height = height;
  topo.pathloss_exponent = alpha;
  topo.rician_kappa = kappa;
  topo.ue_horizontal_distances.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    topo.ue_horizontal_distances.push_back(rng.uniform(r_min, r_max));
  }
  topo.validate();
  return topo;
}

}  // namespace emwt
