// Copyright 2026 The emwt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace emwt {

// Precondition violated by a caller-supplied parameter or input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// mrt() was asked to steer along an all-zero channel vector.
class ZeroChannelError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A numerical invariant broke (e.g. a matrix that must be PD failed Cholesky).
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force references refuse problem sizes beyond their hard limits.
class UnsupportedSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace emwt
