// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqlcu {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Basis dimension that the Pauli decomposition cannot represent (not 2^M).
class UnsupportedDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense oracle requested beyond the qubit guard.
class GuardExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Block encoding with zero subnormalization; nothing to estimate.
class ZeroNormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fqlcu
