// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "emwt/channel.hpp"
#include "emwt/rate.hpp"
#include "emwt/rng.hpp"
#include "emwt/simulation.hpp"
#include "emwt/solver.hpp"

namespace {

emwt::ChannelRealization reference_channels(std::size_t users) {
  emwt::Rng rng(7);
  const emwt::Topology topo = emwt::draw_topology(rng, users, 10.0, 20.0, 50.0, 2.5, 2.0);
  return emwt::draw_channel(rng, topo, 3);
}

std::vector<double> descending_weights(std::size_t users) {
  std::vector<double> w(users);
  for (std::size_t k = 0; k < users; ++k) w[k] = static_cast<double>(users - k);
  return w;
}

void BM_DualValueAndGradient(benchmark::State& state) {
  const auto users = static_cast<std::size_t>(state.range(0));
  const auto ch = reference_channels(users);
  const auto w = descending_weights(users);
  emwt::DualObjective obj(ch, w, emwt::optimal_permutation(w), 1e-3);
  const std::vector<double> p(users, 10.0);
  std::vector<double> grad;
  for (auto _ : state) benchmark::DoNotOptimize(obj.value_and_gradient(p, grad));
}
BENCHMARK(BM_DualValueAndGradient)->Arg(2)->Arg(5)->Arg(10);

void BM_DpcRate(benchmark::State& state) {
  const auto users = static_cast<std::size_t>(state.range(0));
  const auto ch = reference_channels(users);
  const auto w = descending_weights(users);
  const auto perm = emwt::optimal_permutation(w);
  const std::vector<double> p(users, 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(emwt::dpc_weighted_rate(p, ch, w, perm, 1e-3));
}
BENCHMARK(BM_DpcRate)->Arg(5);

void BM_SolvePowerAllocation(benchmark::State& state) {
  const auto users = static_cast<std::size_t>(state.range(0));
  const auto ch = reference_channels(users);
  const auto w = descending_weights(users);
  const auto perm = emwt::optimal_permutation(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(emwt::solve_power_allocation(ch, w, perm, 1e-3, 48.0));
  }
}
BENCHMARK(BM_SolvePowerAllocation)->Arg(2)->Arg(5)->Arg(10);

void BM_Trial(benchmark::State& state) {
  const emwt::SimulationConfig cfg;
  std::size_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(emwt::run_trial(cfg, 40.0, 100.0, 0, trial++));
}
BENCHMARK(BM_Trial);

}  // namespace

BENCHMARK_MAIN();
