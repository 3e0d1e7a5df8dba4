// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "emwt/beamform.hpp"
#include "emwt/channel.hpp"
#include "emwt/eh_model.hpp"
#include "emwt/errors.hpp"
#include "emwt/rng.hpp"

namespace emwt {
namespace {

const EhParams kReference{6400.0, 0.003, 200.0};

TEST(ComputeM, SmallProductApproachesHalf) {
  EXPECT_NEAR(compute_m(1e-12, 1.0), 0.5, 1e-12);
}

TEST(ComputeM, ReferenceParameters) {
  // 1 / (1 + e^19.2), evaluated independently in double precision.
  EXPECT_NEAR(compute_m(6400.0, 0.003), 4.587181725605288e-09, 1e-21);
}

TEST(ComputeM, QuarterAtLogThree) { EXPECT_NEAR(compute_m(1.0, std::log(3.0)), 0.25, 1e-15); }

TEST(ComputeM, RejectsNonPositive) {
  EXPECT_THROW(compute_m(0.0, 1.0), InvalidArgument);
  EXPECT_THROW(compute_m(1.0, -1.0), InvalidArgument);
  EXPECT_THROW(EhParams(1.0, 1.0, 0.0), InvalidArgument);
}

TEST(ComputeM, StoredOnConstruction) {
  EXPECT_EQ(kReference.m(), compute_m(6400.0, 0.003));
  EXPECT_GT(kReference.m(), 0.0);
  EXPECT_LT(kReference.m(), 0.5);
}

TEST(Harvest, ZeroInputGivesZero) { EXPECT_EQ(harvest(kReference, 0.0), 0.0); }

TEST(Harvest, MidpointAtTurningPoint) {
  const double m = kReference.m();
  EXPECT_EQ(harvest(kReference, 0.003), 200.0 * (0.5 - m) / (1.0 - m));
  EXPECT_NEAR(harvest(kReference, 0.003), 99.99999954128182, 1e-9);
}

TEST(Harvest, SaturatesWithoutOverflow) {
  // exp(-6400 * 0.997) underflows; the output is c.
  EXPECT_NEAR(harvest(kReference, 1.0), 200.0, 1e-9);
  EXPECT_TRUE(std::isfinite(harvest(kReference, 1e9)));
  EXPECT_TRUE(std::isfinite(harvest(EhParams(1e6, 1.0, 1.0), 0.0)));
}

TEST(Harvest, RejectsNegativeInput) { EXPECT_THROW(harvest(kReference, -1e-9), InvalidArgument); }

TEST(Harvest, MonotoneAndBounded) {
  for (const EhParams& params : {kReference, EhParams(2.0, 1.5, 7.0), EhParams(150.0, 0.014, 24.0)}) {
    double previous = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double x = 200.0 * params.b() * i / 20000.0;
      const double y = harvest(params, x);
      EXPECT_GE(y, previous);
      EXPECT_GE(y, 0.0);
      EXPECT_LE(y, params.c());
      previous = y;
    }
    EXPECT_GT(harvest(params, 1e6 * params.b()), 0.999 * params.c());
    EXPECT_LE(std::abs(harvest(params, 0.0)), 1e-9 * params.c());
  }
}

TEST(MaxHarvest, SingleUnitChannel) {
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(3);
  h[1] = 1.0;
  const ChannelRealization ch({h});
  const std::vector<double> caps{200.0};
  EXPECT_EQ(max_harvest(kReference, caps, ch), harvest(kReference, 200.0));
}

TEST(MaxHarvest, ZeroChannelsGiveZero) {
  const ChannelRealization ch({Eigen::VectorXcd::Zero(2), Eigen::VectorXcd::Zero(2)});
  const std::vector<double> caps{200.0, 200.0};
  EXPECT_EQ(max_harvest(kReference, caps, ch), 0.0);
}

TEST(MaxHarvest, RejectsMismatchedCaps) {
  const ChannelRealization ch({Eigen::VectorXcd::Ones(2)});
  const std::vector<double> caps{1.0, 2.0};
  EXPECT_THROW(max_harvest(kReference, caps, ch), InvalidArgument);
}

TEST(MaxHarvest, EqualsMrtComposition) {
  // Low-curvature harvester so the comparison is not trivially saturated.
  const EhParams params(0.5, 2.0, 10.0);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::derive(11, {i});
    const std::size_t users = 1 + i % 5;
    std::vector<Eigen::VectorXcd> h;
    std::vector<double> caps;
    for (std::size_t k = 0; k < users; ++k) {
      Eigen::VectorXcd v(1 + static_cast<Eigen::Index>(i % 4));
      for (auto& x : v) x = 0.3 * rng.complex_normal();
      h.push_back(v);
      caps.push_back(rng.uniform(0.0, 5.0));
    }
    const ChannelRealization ch(h);
    const double direct = max_harvest(params, caps, ch);
    const double composed = harvest(params, input_power(ch, mrt_all(ch, caps)));
    EXPECT_NEAR(direct, composed, 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

}  // namespace
}  // namespace emwt
