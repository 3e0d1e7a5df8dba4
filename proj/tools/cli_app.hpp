// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "emwt/simulation.hpp"

namespace emwt::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

/// Entry point shared by the executable and the tests.
/// Subcommands: simulate (CSV), single (JSON), validate (table).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// JSON record of one trial with every intermediate quantity.
std::string single_json(const SimulationConfig& cfg, const TrialOutcome& trial, bool bits);

}  // namespace emwt::cli
