// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/diagonal_lcu.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fqlcu/walsh_hadamard.hpp"

namespace fqlcu {

double DiagonalLcu::identity_shift() const noexcept {
  const double n = electrons;
  return n * identity_one + 0.5 * n * (n - 1.0) * identity_two;
}

RealMatrix diagonal_gamma(const RealMatrix& v) {
  const std::size_t d = v.dim();
  RealMatrix g = v;
  fwht_rows(g.data(), d);
  RealMatrix t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t(j, i) = g(i, j);
  fwht_rows(t.data(), d);
  const double scale = 1.0 / (static_cast<double>(d) * static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const double w = t(j, i) * scale;
      g(i, j) = w;
      g(j, i) = w;
    }
  }
  return g;
}

DiagonalLcu decompose_diagonal(const DiagonalHamiltonian& h, int electrons,
                               double zero_cutoff) {
  if (electrons < 2) {
    throw std::invalid_argument("diagonal canonicalization needs N >= 2 electrons");
  }
  const std::size_t d = h.dim();
  const int m = h.index_bits();
  const auto one_raw = decompose_one_body(h.one_body(), 0.0);
  const RealMatrix gamma = diagonal_gamma(h.coulomb());

  DiagonalLcu lcu;
  lcu.index_bits = m;
  lcu.electrons = electrons;
  lcu.zero_cutoff = zero_cutoff;
  lcu.one = OneBodyCoefficients(m);
  lcu.two = ZPairCoefficients(m);
  lcu.identity_one = one_raw.value(0);
  lcu.identity_two = gamma(0, 0);

  const double fold = static_cast<double>(electrons - 1);
  std::vector<double> one(d * d, 0.0);
  for (const auto& [key, w] : one_raw) one[key] = w;
  for (std::size_t q = 1; q < d; ++q) one[q] += fold * gamma(0, q);
  for (std::size_t k = 1; k < d * d; ++k) {
    if (std::fabs(one[k]) > zero_cutoff) lcu.one.append(k, one[k]);
  }
  for (std::size_t p = 1; p < d; ++p)
    for (std::size_t r = 1; r < d; ++r) {
      const double w = gamma(p, r);
      if (std::fabs(w) > zero_cutoff) lcu.two.append((p << m) | r, w);
    }
  return lcu;
}

NormBreakdown norm_breakdown(const DiagonalHamiltonian& h, const DiagonalLcu& lcu) {
  const double n = lcu.electrons;
  const double cutoff = lcu.zero_cutoff;
  const auto part_norm = [&](const RealMatrix& m) {
    CompensatedSum s;
    for (const auto& [key, w] : decompose_one_body(m, cutoff)) {
      if (key != 0) s.add(std::fabs(w));
    }
    return n * s.value();
  };
  NormBreakdown b;
  b.lambda_T = part_norm(h.kinetic());
  b.lambda_U = part_norm(h.external());
  const RealMatrix gamma = diagonal_gamma(h.coulomb());
  CompensatedSum v;
  const std::size_t d = h.dim();
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t r = 0; r < d; ++r) {
      if (p == 0 && r == 0) continue;
      const double w = std::fabs(gamma(p, r));
      if (w > cutoff) v.add(w);
    }
  b.lambda_V = 0.5 * n * (n - 1.0) * v.value();
  b.lambda_1 = n * lcu.one.abs_sum();
  b.lambda_2 = 0.5 * n * (n - 1.0) * lcu.two.abs_sum();
  b.lambda_total = b.lambda_1 + b.lambda_2;
  return b;
}

NormBreakdown norm_breakdown(const DiagonalHamiltonian& h, int electrons,
                             double zero_cutoff) {
  return norm_breakdown(h, decompose_diagonal(h, electrons, zero_cutoff));
}

std::size_t count_diagonal_L(const DiagonalLcu& lcu) {
  const int m = lcu.index_bits;
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  std::size_t count = lcu.one.size();
  for (const auto& [key, w] : lcu.two) {
    if ((key >> m) <= (key & mask) && w != 0.0) ++count;
  }
  if (count > max_diagonal_L(lcu.dim())) {
    throw std::logic_error("diagonal coefficient count exceeds D^2 + D(D+1)/2");
  }
  return count;
}

}  // namespace fqlcu
