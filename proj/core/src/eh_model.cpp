// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "emwt/eh_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "emwt/channel.hpp"
#include "emwt/errors.hpp"

namespace emwt {

namespace {

constexpr double kMaxExponent = 700.0;

// 1 / (1 + exp(-t)) with the exponent clamped so exp() never overflows.
double logistic(double t) {
  const double e = std::exp(std::clamp(-t, -kMaxExponent, kMaxExponent));
  return 1.0 / (1.0 + e);
}

}  // namespace

double compute_m(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgument("harvester curvature a and turning point b must be positive");
  }
  return logistic(-a * b);
}

EhParams::EhParams(double a, double b, double c) : a_(a), b_(b), c_(c), m_(0.0) {
  if (!(c > 0.0)) {
    throw InvalidArgument("harvester saturation power c must be positive");
  }
  m_ = compute_m(a, b);
}

double harvest(const EhParams& params, double p_in) {
  if (!(p_in >= 0.0)) {
    throw InvalidArgument("harvester input power must be non-negative, got " +
                          std::to_string(p_in));
  }
  const double s = logistic(params.a() * (p_in - params.b()));
  // s >= m holds mathematically for p_in >= 0; rounding can dip below.
  return std::max(0.0, params.c() * (s - params.m()) / (1.0 - params.m()));
}

double max_harvest(const EhParams& params, std::span<const double> p_max,
                   const ChannelRealization& channels) {
  if (p_max.size() != channels.size()) {
    throw InvalidArgument("power cap count does not match the number of UEs");
  }
  double p_in = 0.0;
  for (std::size_t k = 0; k < p_max.size(); ++k) {
    if (!(p_max[k] >= 0.0)) {
      throw InvalidArgument("per-UE power caps must be non-negative");
    }
    p_in += p_max[k] * channels.gain(k);
  }
  return harvest(params, p_in);
}

}  // namespace emwt
