// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "emwt/errors.hpp"
#include "emwt/simulation.hpp"

namespace emwt {

/// Malformed configuration. line() is 1-based, 0 when the problem is not tied
/// to a single line (e.g. a cross-field invariant or a --set override).
class ConfigError : public InvalidArgument {
 public:
  ConfigError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Key/value text format:
///
///   # comment          ; also a comment
///   seed = 7           keys before any [section] are top level
///   [system]
///   weights = 0.3, 0.25, 0.2, 0.15, 0.1
///
/// Lists are comma separated; booleans are true/false/1/0. Unknown sections or
/// keys are errors. Missing keys keep their defaults (the SimulationConfig
/// defaults).
///
/// Recognized keys:
///   seed
///   system.antennas system.noise_power system.phi system.p_cir system.weights
///   ue.p_max                  (scalar for every UE, or one value per UE)
///   eh.a eh.b eh.c
///   topology.height topology.r_min topology.r_max topology.freeze
///   channel.kappa channel.alpha channel.independent_dl
///   solver.tol solver.kkt_tol solver.max_iter
///   sweep.p_cir sweep.c sweep.trials sweep.threads
class ConfigBuilder {
 public:
  ConfigBuilder();

  /// Parses a whole document; later keys overwrite earlier ones.
  void parse(std::istream& in, const std::string& source);
  void parse_file(const std::filesystem::path& path);
  /// "section.key=value" (or "seed=value").
  void apply_override(std::string_view assignment);

  /// Resolves scalar broadcasts and checks every invariant.
  SimulationConfig build() const;

 private:
  void set(const std::string& key, const std::string& value, const std::string& source,
           std::size_t line);

  SimulationConfig cfg_;
  double eh_a_;
  double eh_b_;
  double eh_c_;
  std::vector<double> p_max_;
};

/// Convenience: defaults, then the file (if non-empty), then the overrides.
SimulationConfig load_config(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {});

}  // namespace emwt
