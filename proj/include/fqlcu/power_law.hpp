// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace fqlcu {

struct PowerLaw {
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Least-squares line through (log x, log y): y ~ prefactor * x^exponent.
/// Throws std::invalid_argument for fewer than two points, mismatched sizes,
/// nonpositive values, or all-equal x.
PowerLaw power_law_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace fqlcu
