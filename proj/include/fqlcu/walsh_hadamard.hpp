// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

namespace fqlcu {

/// In-place unnormalized fast Walsh-Hadamard transform, x <- H^{(x)M} x with
/// H = [[1, 1], [1, -1]]. data.size() must be a power of two.
void fwht(std::span<double> data);

/// Applies fwht to each contiguous row of a row-major rows x cols block.
void fwht_rows(std::span<double> data, std::size_t cols);

}  // namespace fqlcu
