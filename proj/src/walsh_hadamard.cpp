// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/walsh_hadamard.hpp"

#include <stdexcept>

#include "fqlcu/bits.hpp"

namespace fqlcu {

void fwht(std::span<double> data) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("fwht: length must be a power of two");
  }
  double* v = data.data();
  for (std::size_t h = 1; h < n; h *= 2) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = v[j];
        const double y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

void fwht_rows(std::span<double> data, std::size_t cols) {
  if (cols == 0 || data.size() % cols != 0) {
    throw std::invalid_argument("fwht_rows: block is not a whole number of rows");
  }
  for (std::size_t off = 0; off < data.size(); off += cols) {
    fwht(data.subspan(off, cols));
  }
}

}  // namespace fqlcu
