// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqlcu {

constexpr bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

/// Exponent M with 2^M == n. Throws when n is not a power of two.
inline int exact_log2(std::uint64_t n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("exact_log2: " + std::to_string(n) +
                                " is not a power of two");
  }
  return std::countr_zero(n);
}

/// ceil(log2(n)) for n >= 1; ceil_log2(1) == 0.
constexpr int ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

/// Largest power of two dividing n (the power itself, not its exponent).
constexpr std::uint64_t largest_power_of_two_factor(std::uint64_t n) {
  return n & (~n + 1);
}

constexpr int popcount_and(std::uint32_t a, std::uint32_t b) {
  return std::popcount(a & b);
}

}  // namespace fqlcu
