// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return emwt::cli::run(argc, argv, std::cout, std::cerr); }
