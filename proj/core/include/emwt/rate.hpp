// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace emwt {

class ChannelRealization;

/// DPC encoding order. order()[k] is the (0-based) UE encoded k-th.
class Permutation {
 public:
  /// Throws InvalidArgument unless `order` is a bijection on {0, ..., K-1}.
  explicit Permutation(std::vector<std::size_t> order);
  static Permutation identity(std::size_t size);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Weighted throughput in nats per channel use. per_user[k] is the rate of
/// UE k (original index) under the encoding order used.
struct WeightedRate {
  double value = 0.0;
  std::vector<double> per_user;
};

/// UEs sorted by weight, largest first; equal weights keep index order.
Permutation optimal_permutation(std::span<const double> weights);

/// Weighted DPC throughput for a fixed encoding order:
///   sum_k w_{pi_k} * log( det A_k / det A_{k-1} ),
///   A_k = I + sum_{n<=k} (p_{pi_n} / sigma2) H_{pi_n}.
/// `p` and `weights` are indexed by original UE.
WeightedRate dpc_weighted_rate(std::span<const double> p, const ChannelRealization& channels,
                               std::span<const double> weights, const Permutation& perm,
                               double sigma2);

/// The same quantity after summation by parts:
///   sum_k (w_{pi_k} - w_{pi_{k+1}}) * log det A_k,   w_{pi_{K+1}} = 0.
/// Concave in p whenever the weights are non-increasing along `perm`.
WeightedRate dual_weighted_rate(std::span<const double> p, const ChannelRealization& channels,
                                std::span<const double> weights, const Permutation& perm,
                                double sigma2);

/// Gradient of dual_weighted_rate with respect to p, indexed by original UE:
///   d/dp_{pi_m} = (1/sigma2) * sum_{k>=m} dw_k * h_{pi_m}^H A_k^{-1} h_{pi_m}.
std::vector<double> objective_gradient(std::span<const double> p,
                                       const ChannelRealization& channels,
                                       std::span<const double> weights, const Permutation& perm,
                                       double sigma2);

/// Reusable evaluator of the dual objective and its gradient. Holds the
/// outer products already permuted and scaled by 1/sigma2 so that repeated
/// evaluations inside the solver do not reallocate.
class DualObjective {
 public:
  DualObjective(const ChannelRealization& channels, std::span<const double> weights,
                const Permutation& perm, double sigma2);

  std::size_t size() const noexcept { return order_.size(); }

  /// log det A_k for k = 0..K-1 into `logdets` (resized).
  void log_dets(std::span<const double> p, std::vector<double>& logdets);
  double value(std::span<const double> p);
  /// Returns the value; writes the gradient (original UE order) into `grad`.
  double value_and_gradient(std::span<const double> p, std::vector<double>& grad);

  /// Weight differences along the encoding order.
  const std::vector<double>& weight_steps() const noexcept { return dw_; }

 private:
  void factor(Eigen::Index k, std::span<const double> p);

  std::vector<std::size_t> order_;
  std::vector<double> dw_;
  std::vector<Eigen::MatrixXcd> scaled_outer_;  // H_{pi_k} / sigma2
  std::vector<Eigen::VectorXcd> scaled_h_;      // h_{pi_k} / sqrt(sigma2)
  Eigen::MatrixXcd acc_;
  Eigen::LLT<Eigen::MatrixXcd> llt_;
  Eigen::VectorXcd work_;
  std::vector<double> logdet_work_;
};

}  // namespace emwt
