// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/power_law.hpp"

#include <cmath>
#include <stdexcept>

namespace fqlcu {

PowerLaw power_law_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("power_law_fit: size mismatch");
  if (xs.size() < 2) throw std::invalid_argument("power_law_fit: need at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("power_law_fit: values must be positive");
    }
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(ys[i]) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("power_law_fit: x values are all equal");
  const double slope = sxy / sxx;
  return {slope, std::exp(my - slope * mx)};
}

}  // namespace fqlcu
