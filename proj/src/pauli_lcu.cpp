// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/pauli_lcu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fqlcu/bits.hpp"
#include "fqlcu/errors.hpp"
#include "fqlcu/parallel.hpp"
#include "fqlcu/walsh_hadamard.hpp"

namespace fqlcu {

namespace {

int index_bits_of(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw UnsupportedDimensionError("dimension " + std::to_string(dim) +
                                    " is not a power of two");
  }
  return exact_log2(dim);
}

}  // namespace

OneBodyCoefficients decompose_one_body(const RealMatrix& h1, double zero_cutoff) {
  const std::size_t d = h1.dim();
  const int m = index_bits_of(d);
  const double scale = 1.0 / static_cast<double>(d);
  std::vector<double> rows(d * d);
  parallel_for(0, d, [&](std::size_t p) {
    std::span<double> row(rows.data() + p * d, d);
    for (std::size_t a = 0; a < d; ++a) row[a] = h1(p ^ a, a);
    fwht(row);
  });
  OneBodyCoefficients out(m);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const double w = rows[p * d + q] * scale;
      if (std::fabs(w) > zero_cutoff) out.append((p << m) | q, w);
    }
  return out;
}

TwoBodyCoefficients decompose_two_body(const RealTensor4& h2, double zero_cutoff) {
  const std::size_t d = h2.dim();
  const int m = index_bits_of(d);
  const std::size_t d2 = d * d;
  const double scale = 1.0 / static_cast<double>(d2);
  const bool mirrored = h2.has_pair_exchange_symmetry();
  TwoBodyCoefficients out(m);
  // block[f * d2 + u * d + v] = omega(g, u, f, v)
  std::vector<double> block(d * d2);
  for (std::size_t g = 0; g < d; ++g) {
    const std::size_t f_first = mirrored ? g : 0;
    parallel_for(f_first, d, [&](std::size_t f) {
      std::span<double> row(block.data() + f * d2, d2);
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t s = 0; s < d; ++s) row[q * d + s] = h2(g ^ q, q, f ^ s, s);
      fwht(row);
      for (double& x : row) x *= scale;
    });
    if (mirrored) {
      double* diag = block.data() + g * d2;
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = u + 1; v < d; ++v) {
          const double w = 0.5 * (diag[u * d + v] + diag[v * d + u]);
          diag[u * d + v] = w;
          diag[v * d + u] = w;
        }
      // omega(g, u, f, v) = omega(f, v, g, u) for f < g, taken from block f.
      const auto& done = out.entries();
      for (std::size_t f = 0; f < g; ++f) {
        double* row = block.data() + f * d2;
        std::fill(row, row + d2, 0.0);
        for (std::size_t v = 0; v < d; ++v) {
          const std::uint64_t lo = out.pack({static_cast<std::uint32_t>(f),
                                             static_cast<std::uint32_t>(v),
                                             static_cast<std::uint32_t>(g), 0});
          auto it = std::lower_bound(
              done.begin(), done.end(), lo,
              [](const auto& e, std::uint64_t k) { return e.first < k; });
          for (; it != done.end() && (it->first >> m) == (lo >> m); ++it) {
            const std::size_t u = it->first & (d - 1);
            row[u * d + v] = it->second;
          }
        }
      }
    }
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t f = 0; f < d; ++f)
        for (std::size_t v = 0; v < d; ++v) {
          const double w = block[f * d2 + u * d + v];
          if (std::fabs(w) > zero_cutoff) {
            out.append((((g << m | u) << m | f) << m) | v, w);
          }
        }
  }
  return out;
}

RealMatrix inverse_one_body(const OneBodyCoefficients& coeffs) {
  const std::size_t d = coeffs.dim();
  const int m = coeffs.index_bits();
  std::vector<double> rows(d * d, 0.0);
  for (const auto& [key, w] : coeffs) rows[key] = w;
  RealMatrix h1(d);
  for (std::size_t p = 0; p < d; ++p) {
    std::span<double> row(rows.data() + p * d, d);
    fwht(row);
    for (std::size_t a = 0; a < d; ++a) h1(p ^ a, a) = row[a];
  }
  (void)m;
  return h1;
}

RealTensor4 inverse_two_body(const TwoBodyCoefficients& coeffs) {
  const std::size_t d = coeffs.dim();
  const std::size_t d2 = d * d;
  // rows[(g * d + f) * d2 + u * d + v] = omega(g, u, f, v)
  std::vector<double> rows(d2 * d2, 0.0);
  for (const auto& [key, w] : coeffs) {
    const auto k = coeffs.unpack(key);
    rows[(k[0] * d + k[2]) * d2 + k[1] * d + k[3]] = w;
  }
  RealTensor4 h2(d);
  for (std::size_t g = 0; g < d; ++g)
    for (std::size_t f = 0; f < d; ++f) {
      std::span<double> row(rows.data() + (g * d + f) * d2, d2);
      fwht(row);
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t s = 0; s < d; ++s) h2(g ^ q, q, f ^ s, s) = row[q * d + s];
    }
  return h2;
}

double CanonicalLcu::identity_shift() const noexcept {
  const double n = electrons;
  return n * identity_one + 0.5 * n * (n - 1.0) * identity_two;
}

CanonicalLcu canonicalize(const OneBodyCoefficients& one_raw,
                          const TwoBodyCoefficients& two_raw, int electrons,
                          double zero_cutoff) {
  if (electrons < 2) {
    throw std::invalid_argument("canonicalization needs N >= 2 electrons");
  }
  int m = one_raw.index_bits();
  if (one_raw.empty() && !two_raw.empty()) m = two_raw.index_bits();
  if (!two_raw.empty() && two_raw.index_bits() != m) {
    throw std::invalid_argument("one- and two-body index widths differ");
  }
  const std::size_t pairs = std::size_t{1} << (2 * m);
  const std::uint64_t pair_mask = pairs - 1;

  CanonicalLcu lcu;
  lcu.index_bits = m;
  lcu.electrons = electrons;
  lcu.zero_cutoff = zero_cutoff;
  lcu.one = OneBodyCoefficients(m);
  lcu.two = TwoBodyCoefficients(m);

  std::vector<double> one(pairs, 0.0);
  std::vector<double> left(pairs, 0.0);   // omega(p, q, 0, 0)
  std::vector<double> right(pairs, 0.0);  // omega(0, 0, p, q)
  for (const auto& [key, w] : one_raw) one[key] = w;

  // Upper part (P <= R) as stored, lower part (P > R) transposed and sorted.
  std::vector<TwoBodyCoefficients::Entry> lower;
  std::vector<TwoBodyCoefficients::Entry> upper;
  for (const auto& [key, w] : two_raw) {
    const std::uint64_t p = key >> (2 * m);
    const std::uint64_t r = key & pair_mask;
    if (p == 0 && r == 0) {
      lcu.identity_two = w;
    } else if (r == 0) {
      left[p] = w;
    } else if (p == 0) {
      right[r] = w;
    } else if (p <= r) {
      upper.emplace_back(key, w);
    } else {
      lower.emplace_back((r << (2 * m)) | p, w);
    }
  }
  std::sort(lower.begin(), lower.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  bool symmetric = left == right;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < upper.size() || j < lower.size()) {
    std::uint64_t key;
    double up = 0.0;
    double lo = 0.0;
    if (j == lower.size() || (i < upper.size() && upper[i].first < lower[j].first)) {
      key = upper[i].first;
      up = upper[i++].second;
    } else if (i == upper.size() || lower[j].first < upper[i].first) {
      key = lower[j].first;
      lo = lower[j++].second;
    } else {
      key = upper[i].first;
      up = upper[i++].second;
      lo = lower[j++].second;
    }
    double w;
    if ((key >> (2 * m)) == (key & pair_mask)) {
      w = up;
    } else {
      symmetric = symmetric && up == lo;
      w = 0.5 * (up + lo);
    }
    if (std::fabs(w) > zero_cutoff) lcu.two.append(key, w);
  }
  lcu.two_fold_symmetric = symmetric;

  lcu.identity_one = one[0];
  const double fold = static_cast<double>(electrons - 1);
  for (std::size_t k = 1; k < pairs; ++k) {
    const double w = one[k] + fold * (0.5 * (left[k] + right[k]));
    if (std::fabs(w) > zero_cutoff) lcu.one.append(k, w);
  }
  return lcu;
}

CanonicalLcu decompose(const GeneralHamiltonian& h, int electrons, double zero_cutoff) {
  if (electrons < 2) {
    throw std::invalid_argument("canonicalization needs N >= 2 electrons");
  }
  const auto one = decompose_one_body(h.one_body(), zero_cutoff);
  const auto two = decompose_two_body(h.two_body(), zero_cutoff);
  return canonicalize(one, two, electrons, zero_cutoff);
}

LcuSummary one_norm(const CanonicalLcu& lcu) {
  const int m = lcu.index_bits;
  const std::uint64_t pair_mask = (std::uint64_t{1} << (2 * m)) - 1;
  CompensatedSum all_two;
  for (const auto& [key, w] : lcu.two) {
    const double a = std::fabs(w);
    all_two.add(a);
    if ((key >> (2 * m)) != (key & pair_mask)) all_two.add(a);
  }
  const double n = lcu.electrons;
  LcuSummary s;
  s.lambda_one = n * lcu.one.abs_sum();
  s.lambda_two = 0.5 * n * (n - 1.0) * all_two.value();
  s.lambda_total = s.lambda_one + s.lambda_two;
  s.nnz_one = lcu.one.size();
  s.nnz_two_unique = lcu.two.size();
  s.identity_shift = lcu.identity_shift();
  return s;
}

}  // namespace fqlcu
