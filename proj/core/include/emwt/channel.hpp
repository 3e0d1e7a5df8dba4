// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace emwt {

class Rng;

/// UAV hovering above the centre of a disc of ground UEs.
struct Topology {
  double uav_height = 50.0;                     // m
  std::vector<double> ue_horizontal_distances;  // m, one per UE
  double pathloss_exponent = 2.5;
  double rician_kappa = 2.0;  // +inf selects a pure line-of-sight channel

  /// Throws InvalidArgument when any invariant is violated.
  void validate() const;
  std::size_t size() const noexcept { return ue_horizontal_distances.size(); }
};

/// Per-UE channel vectors h_k (length N) with cached outer products
/// H_k = h_k h_k^H. Immutable once built.
class ChannelRealization {
 public:
  ChannelRealization() = default;
  /// Throws InvalidArgument if the vectors do not share one length >= 1.
  explicit ChannelRealization(std::vector<Eigen::VectorXcd> h);

  std::size_t size() const noexcept { return h_.size(); }
  Eigen::Index antennas() const noexcept { return antennas_; }

  const Eigen::VectorXcd& vector(std::size_t k) const { return h_[k]; }
  const Eigen::MatrixXcd& outer(std::size_t k) const { return outer_[k]; }
  /// |h_k|^2, equal to trace(H_k).
  double gain(std::size_t k) const { return gain_[k]; }

  const std::vector<Eigen::VectorXcd>& vectors() const noexcept { return h_; }

 private:
  std::vector<Eigen::VectorXcd> h_;
  std::vector<Eigen::MatrixXcd> outer_;
  std::vector<double> gain_;
  Eigen::Index antennas_ = 0;
};

/// 3-D distance between the UAV and a UE at the given horizontal offset.
double link_distance(double height, double horizontal);

/// Large-scale power gain d^-alpha.
double pathloss_gain(double distance, double alpha);

/// Rician draw per UE:
///   h_k = d_k^(-alpha/2) * ( sqrt(kappa/(kappa+1)) * 1  +  sqrt(1/(kappa+1)) * g_k )
/// with 1 the all-ones steering vector and g_k ~ CN(0, I_N).
ChannelRealization draw_channel(Rng& rng, const Topology& topology, Eigen::Index n_antennas);

/// Horizontal distances i.i.d. uniform on [r_min, r_max].
Topology draw_topology(Rng& rng, std::size_t count, double r_min, double r_max, double height,
                       double alpha, double kappa);

}  // namespace emwt
