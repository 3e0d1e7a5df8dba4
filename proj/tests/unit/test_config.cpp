// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "emwt/config.hpp"

namespace emwt {
namespace {

SimulationConfig parse(const std::string& text) {
  ConfigBuilder b;
  std::istringstream in(text);
  b.parse(in, "test.ini");
  return b.build();
}

TEST(Config, DefaultsMirrorReferenceSetup) {
  const SimulationConfig cfg = ConfigBuilder().build();
  EXPECT_EQ(cfg.system.ue_count(), 5u);
  EXPECT_EQ(cfg.system.antennas, 3u);
  EXPECT_EQ(cfg.system.noise_power, 0.001);
  EXPECT_EQ(cfg.system.phi, 0.8);
  EXPECT_EQ(cfg.system.weights, (std::vector<double>{0.3, 0.25, 0.2, 0.15, 0.1}));
  EXPECT_EQ(cfg.system.p_max, std::vector<double>(5, 200.0));
  EXPECT_EQ(cfg.system.eh.a(), 6400.0);
  EXPECT_EQ(cfg.system.eh.b(), 0.003);
  EXPECT_EQ(cfg.system.eh.c(), 200.0);
  EXPECT_EQ(cfg.geometry.height, 50.0);
  EXPECT_EQ(cfg.geometry.r_min, 10.0);
  EXPECT_EQ(cfg.geometry.r_max, 20.0);
  EXPECT_EQ(cfg.geometry.kappa, 2.0);
  EXPECT_EQ(cfg.geometry.alpha, 2.5);
  EXPECT_FALSE(cfg.geometry.independent_dl);
  EXPECT_EQ(cfg.sweep.trials, 10000u);
  EXPECT_EQ(cfg.sweep.c_values, (std::vector<double>{100, 200}));
  EXPECT_EQ(cfg.sweep.p_cir_values.front(), 40.0);
  EXPECT_EQ(cfg.sweep.p_cir_values.back(), 80.0);
  EXPECT_EQ(cfg.system.solver.tol, 1e-8);
  EXPECT_EQ(cfg.system.solver.max_iter, 10000);
}

TEST(Config, ParsesSectionsListsAndComments) {
  const SimulationConfig cfg = parse(R"(
# top-level
seed = 99
[system]
weights = 0.6, 0.4   ; trailing comment
p_cir = 12.5
[ue]
p_max = 50
[eh]
c = 100
[channel]
independent_dl = true
kappa = inf
[sweep]
p_cir = 1,2,3
trials = 7
)");
  EXPECT_EQ(cfg.seed, 99u);
  EXPECT_EQ(cfg.system.weights, (std::vector<double>{0.6, 0.4}));
  EXPECT_EQ(cfg.system.p_max, (std::vector<double>{50.0, 50.0}));
  EXPECT_EQ(cfg.system.p_cir, 12.5);
  EXPECT_EQ(cfg.system.eh.c(), 100.0);
  EXPECT_TRUE(cfg.geometry.independent_dl);
  EXPECT_TRUE(std::isinf(cfg.geometry.kappa));
  EXPECT_EQ(cfg.sweep.p_cir_values, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(cfg.sweep.trials, 7u);
}

TEST(Config, ErrorsCarryLineNumbers) {
  try {
    parse("[system]\nphi = 0.5\nnoise_power = loud\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("test.ini:3"), std::string::npos);
  }
  try {
    parse("[eh]\n\n bogus = 1\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("eh.bogus"), std::string::npos);
  }
  EXPECT_THROW(parse("[system\n"), ConfigError);
  EXPECT_THROW(parse("just text\n"), ConfigError);
}

TEST(Config, CrossFieldInvariantsChecked) {
  EXPECT_THROW(parse("[system]\nweights = 0.5, 0.5\n[ue]\np_max = 1, 2, 3\n"), ConfigError);
  EXPECT_THROW(parse("[system]\nphi = 0\n"), ConfigError);
  EXPECT_THROW(parse("[topology]\nr_min = 30\n"), ConfigError);
  EXPECT_THROW(parse("[eh]\na = -1\n"), ConfigError);
}

TEST(Config, OverridesApplyAfterFile) {
  ConfigBuilder b;
  std::istringstream in("[system]\np_cir = 10\n");
  b.parse(in, "x");
  b.apply_override("system.p_cir=55");
  b.apply_override("seed = 3");
  const SimulationConfig cfg = b.build();
  EXPECT_EQ(cfg.system.p_cir, 55.0);
  EXPECT_EQ(cfg.seed, 3u);
  EXPECT_THROW(b.apply_override("system.p_cir"), ConfigError);
  EXPECT_THROW(b.apply_override("nope.key=1"), ConfigError);
}

TEST(Config, MissingFileIsAnError) {
  EXPECT_THROW(load_config("/nonexistent/emwt.ini"), ConfigError);
}

}  // namespace
}  // namespace emwt
