// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace emwt {

/// Seedable random source used by every Monte-Carlo draw ("emwt-rng-v1").
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Variates are produced here rather than through the
/// implementation-defined <random> distributions, so a seed pins the
/// sequence regardless of which standard library is linked:
///   uniform  = (engine() >> 11) * 2^-53                       in [0, 1)
///   gaussian = Box-Muller on (1 - u1, u2), one variate per pair
///
/// Stream splitting: a child stream for a tuple of indices is seeded with
/// splitmix64 folded over (seed, i0, i1, ...), see Rng::derive().
class Rng {
 public:
  static constexpr const char* kScheme = "emwt-rng-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream keyed by (seed, indices...).
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> indices);

  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double standard_normal();
  double exponential();
  /// CN(0, 1): real and imaginary parts each N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace emwt
