// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emwt/channel.hpp"
#include "emwt/errors.hpp"

namespace emwt {

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (const std::size_t i : order_) {
    if (i >= order_.size() || seen[i]) {
      throw InvalidArgument("encoding order is not a permutation");
    }
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

Permutation optimal_permutation(std::span<const double> weights) {
  for (const double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("throughput weights must be non-negative");
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return weights[i] > weights[j]; });
  return Permutation(std::move(order));
}

namespace {

void check_inputs(std::span<const double> p, const ChannelRealization& channels,
                  std::span<const double> weights, const Permutation& perm, double sigma2) {
  const std::size_t k = channels.size();
  if (p.size() != k || weights.size() != k || perm.size() != k) {
    throw InvalidArgument("power, weight, permutation and channel sizes disagree");
  }
  if (!(sigma2 > 0.0)) throw InvalidArgument("noise power must be positive");
  for (const double v : p) {
    if (!(v >= 0.0)) throw InvalidArgument("downlink powers must be non-negative");
  }
}

}  // namespace

DualObjective::DualObjective(const ChannelRealization& channels, std::span<const double> weights,
                             const Permutation& perm, double sigma2)
    : order_(perm.order()) {
  const std::size_t k_count = channels.size();
  if (weights.size() != k_count || perm.size() != k_count) {
    throw InvalidArgument("weight, permutation and channel sizes disagree");
  }
  if (!(sigma2 > 0.0)) throw InvalidArgument("noise power must be positive");

  dw_.resize(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const double next = k + 1 < k_count ? weights[order_[k + 1]] : 0.0;
    dw_[k] = weights[order_[k]] - next;
  }
  const double inv_sigma = 1.0 / std::sqrt(sigma2);
  scaled_outer_.reserve(k_count);
  scaled_h_.reserve(k_count);
  for (const std::size_t ue : order_) {
    scaled_outer_.push_back(channels.outer(ue) / sigma2);
    scaled_h_.push_back(channels.vector(ue) * inv_sigma);
  }
  const Eigen::Index n = channels.antennas();
  acc_ = Eigen::MatrixXcd::Identity(n, n);
  work_.resize(n);
}

void DualObjective::factor(Eigen::Index k, std::span<const double> p) {
  acc_ += p[order_[static_cast<std::size_t>(k)]] * scaled_outer_[static_cast<std::size_t>(k)];
  llt_.compute(acc_);
  if (llt_.info() != Eigen::Success) {
    throw InternalConsistencyError("accumulated rate matrix lost positive definiteness");
  }
}

void DualObjective::log_dets(std::span<const double> p, std::vector<double>& logdets) {
  const std::size_t k_count = order_.size();
  logdets.resize(k_count);
  acc_.setIdentity();
  for (std::size_t k = 0; k < k_count; ++k) {
    factor(static_cast<Eigen::Index>(k), p);
    double sum = 0.0;
    const auto& lm = llt_.matrixLLT();
    for (Eigen::Index i = 0; i < lm.rows(); ++i) sum += std::log(lm(i, i).real());
    logdets[k] = 2.0 * sum;
  }
}

double DualObjective::value(std::span<const double> p) {
  log_dets(p, logdet_work_);
  double total = 0.0;
  for (std::size_t k = 0; k < order_.size(); ++k) total += dw_[k] * logdet_work_[k];
  return total;
}

double DualObjective::value_and_gradient(std::span<const double> p, std::vector<double>& grad) {
  const std::size_t k_count = order_.size();
  grad.assign(k_count, 0.0);
  acc_.setIdentity();
  double total = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    factor(static_cast<Eigen::Index>(k), p);
    const auto& lm = llt_.matrixLLT();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < lm.rows(); ++i) sum += std::log(lm(i, i).real());
    total += dw_[k] * 2.0 * sum;
    if (dw_[k] == 0.0) continue;
    // h^H A_k^{-1} h = |L^{-1} h|^2
    for (std::size_t m = 0; m <= k; ++m) {
      work_ = scaled_h_[m];
      llt_.matrixL().solveInPlace(work_);
      grad[order_[m]] += dw_[k] * work_.squaredNorm();
    }
  }
  return total;
}

WeightedRate dpc_weighted_rate(std::span<const double> p, const ChannelRealization& channels,
                               std::span<const double> weights, const Permutation& perm,
                               double sigma2) {
  check_inputs(p, channels, weights, perm, sigma2);
  // Each determinant ratio is evaluated through the matrix determinant lemma,
  //   det(A_{k-1} + s h h^H) / det A_{k-1} = 1 + s h^H A_{k-1}^{-1} h,
  // independently of the log-det chain used by the dual form.
  const Eigen::Index n = channels.antennas();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  Eigen::LLT<Eigen::MatrixXcd> llt;
  Eigen::VectorXcd y(n);

  WeightedRate out;
  out.per_user.assign(p.size(), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t ue = perm[k];
    const double s = p[ue] / sigma2;
    double quad = channels.gain(ue);
    if (k > 0) {
      llt.compute(acc);
      if (llt.info() != Eigen::Success) {
        throw InternalConsistencyError("accumulated rate matrix lost positive definiteness");
      }
      y = channels.vector(ue);
      llt.matrixL().solveInPlace(y);
      quad = y.squaredNorm();
    }
    out.per_user[ue] = std::log1p(s * quad);
    out.value += weights[ue] * out.per_user[ue];
    acc += s * channels.outer(ue);
  }
  return out;
}

WeightedRate dual_weighted_rate(std::span<const double> p, const ChannelRealization& channels,
                                std::span<const double> weights, const Permutation& perm,
                                double sigma2) {
  check_inputs(p, channels, weights, perm, sigma2);
  DualObjective objective(channels, weights, perm, sigma2);
  std::vector<double> logdets;
  objective.log_dets(p, logdets);

  WeightedRate out;
  out.per_user.assign(p.size(), 0.0);
  double previous = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.value += objective.weight_steps()[k] * logdets[k];
    out.per_user[perm[k]] = logdets[k] - previous;
    previous = logdets[k];
  }
  return out;
}

std::vector<double> objective_gradient(std::span<const double> p,
                                       const ChannelRealization& channels,
                                       std::span<const double> weights, const Permutation& perm,
                                       double sigma2) {
  check_inputs(p, channels, weights, perm, sigma2);
  DualObjective objective(channels, weights, perm, sigma2);
  std::vector<double> grad;
  objective.value_and_gradient(p, grad);
  return grad;
}

}  // namespace emwt
