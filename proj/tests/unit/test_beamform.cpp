// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "emwt/beamform.hpp"
#include "emwt/channel.hpp"
#include "emwt/errors.hpp"
#include "emwt/rng.hpp"

namespace emwt {
namespace {

using cd = std::complex<double>;

ChannelRealization random_channels(Rng& rng, std::size_t users, Eigen::Index antennas) {
  std::vector<Eigen::VectorXcd> h;
  for (std::size_t k = 0; k < users; ++k) {
    Eigen::VectorXcd v(antennas);
    for (auto& x : v) x = rng.complex_normal();
    h.push_back(v);
  }
  return ChannelRealization(h);
}

TEST(Mrt, AlignsWithUnitAxis) {
  Eigen::VectorXcd h(3);
  h << 1.0, 0.0, 0.0;
  const Eigen::VectorXcd w = mrt(h, 200.0);
  EXPECT_NEAR(std::abs(w[0] - cd(std::sqrt(200.0), 0.0)), 0.0, 1e-12);
  EXPECT_EQ(w[1], cd(0.0));
  EXPECT_EQ(w[2], cd(0.0));
}

TEST(Mrt, ZeroCapGivesZeroVector) {
  Eigen::VectorXcd h(2);
  h << cd(0.3, -1.0), cd(2.0, 0.5);
  EXPECT_EQ(mrt(h, 0.0).norm(), 0.0);
}

TEST(Mrt, ComplexDirection) {
  Eigen::VectorXcd h(2);
  h << cd(1.0, 0.0), cd(0.0, 1.0);
  h /= std::numbers::sqrt2;
  const Eigen::VectorXcd w = mrt(h, 4.0);
  EXPECT_NEAR(std::abs(w[0] - cd(std::numbers::sqrt2, 0.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(w[1] - cd(0.0, std::numbers::sqrt2)), 0.0, 1e-14);
  EXPECT_NEAR(w.squaredNorm(), 4.0, 1e-14);
}

TEST(Mrt, ZeroChannelIsAnError) {
  EXPECT_THROW(mrt(Eigen::VectorXcd::Zero(3), 1.0), ZeroChannelError);
  EXPECT_THROW(mrt(Eigen::VectorXcd::Ones(3), -1.0), InvalidArgument);
}

TEST(MrtAll, ZeroChannelMapsToZeroBeam) {
  const ChannelRealization ch({Eigen::VectorXcd::Zero(2), Eigen::VectorXcd::Ones(2)});
  const std::vector<double> caps{5.0, 5.0};
  const BeamformerSet beams = mrt_all(ch, caps);
  EXPECT_EQ(beams[0].norm(), 0.0);
  EXPECT_NEAR(beams[1].squaredNorm(), 5.0, 1e-14);
  EXPECT_NEAR(input_power(ch, beams), 10.0, 1e-12);
}

TEST(InputPower, OrthogonalBeamsHarvestNothing) {
  Eigen::VectorXcd h1(2), h2(2), w1(2), w2(2);
  h1 << 1.0, 0.0;
  h2 << cd(1.0, 1.0), cd(1.0, -1.0);
  w1 << 0.0, 3.0;
  w2 << cd(1.0, 1.0), cd(-1.0, 1.0);  // h2^H w2 = 0
  const ChannelRealization ch({h1, h2});
  EXPECT_NEAR(input_power(ch, {w1, w2}), 0.0, 1e-15);
}

TEST(InputPower, MrtReachesCauchySchwarzBound) {
  Rng rng(3);
  const ChannelRealization ch = random_channels(rng, 4, 3);
  const std::vector<double> caps{1.0, 20.0, 200.0, 0.5};
  double bound = 0.0;
  for (std::size_t k = 0; k < 4; ++k) bound += caps[k] * ch.gain(k);
  EXPECT_NEAR(input_power(ch, mrt_all(ch, caps)), bound, 1e-12 * bound);
}

TEST(InputPower, RandomFeasibleBeamsNeverBeatMrt) {
  Rng rng(17);
  for (int instance = 0; instance < 20; ++instance) {
    const ChannelRealization ch = random_channels(rng, 3, 4);
    const std::vector<double> caps{200.0, 50.0, 10.0};
    const double best = input_power(ch, mrt_all(ch, caps));
    for (int trial = 0; trial < 1000; ++trial) {
      BeamformerSet beams;
      for (std::size_t k = 0; k < 3; ++k) {
        Eigen::VectorXcd v(4);
        for (auto& x : v) x = rng.complex_normal();
        v *= std::sqrt(caps[k] * rng.uniform()) / v.norm();
        beams.push_back(v);
      }
      EXPECT_LE(input_power(ch, beams), best * (1.0 + 1e-12));
    }
  }
}

TEST(InputPower, InvariantToPhaseRotation) {
  Rng rng(8);
  const ChannelRealization ch = random_channels(rng, 3, 2);
  BeamformerSet beams;
  for (std::size_t k = 0; k < 3; ++k) {
    Eigen::VectorXcd v(2);
    for (auto& x : v) x = rng.complex_normal();
    beams.push_back(v);
  }
  const double base = input_power(ch, beams);
  beams[1] *= std::polar(1.0, 1.234);
  beams[2] *= std::polar(1.0, -2.5);
  EXPECT_NEAR(input_power(ch, beams), base, 1e-13 * base);
}

TEST(InputPower, RejectsDimensionMismatch) {
  const ChannelRealization ch({Eigen::VectorXcd::Ones(2)});
  EXPECT_THROW(input_power(ch, {}), InvalidArgument);
  EXPECT_THROW(input_power(ch, {Eigen::VectorXcd::Ones(3)}), InvalidArgument);
}

}  // namespace
}  // namespace emwt
