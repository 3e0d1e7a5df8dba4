// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace emwt {

class ChannelRealization;

/// Logistic (sigmoid) RF-to-DC energy harvester.
///
/// All powers are in milliwatts; `a` therefore has units of 1/mW. The output
/// is shifted and rescaled so that zero input maps to zero output and the
/// curve saturates at `c`:
///
///   out(x) = c / (1 - m) * (sigmoid(a * (x - b)) - m),   m = sigmoid(-a * b)
///
/// Note that the model does not enforce energy conservation: with steep
/// curves (large a) and small turning points the output can exceed the input.
class EhParams {
 public:
  /// Throws InvalidArgument unless a, b, c are all strictly positive.
  EhParams(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double m() const noexcept { return m_; }

 private:
  double a_;
  double b_;
  double c_;
  double m_;
};

/// 1 / (1 + exp(a * b)). Result lies in (0, 0.5).
double compute_m(double a, double b);

/// Harvested output power for a given RF input power (both mW).
double harvest(const EhParams& params, double p_in);

/// Harvested power when every UE beams at full power with MRT:
/// harvest(sum_k p_max[k] * |h_k|^2).
double max_harvest(const EhParams& params, std::span<const double> p_max,
                   const ChannelRealization& channels);

}  // namespace emwt
