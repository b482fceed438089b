// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "fqlcu/hamiltonian.hpp"
#include "fqlcu/pauli_keys.hpp"
#include "fqlcu/pauli_lcu.hpp"

namespace fqlcu {

/// Z-string coefficients gamma(p, r) of a diagonal two-body term, keyed (p, r).
using ZPairCoefficients = SparseCoefficients<2>;

/// Canonicalized Pauli LCU of a diagonal-Coulomb Hamiltonian.
/// one: omega'(p, q) with (0, 0) removed and omega'(0, q) += (N-1) gamma(0, q).
/// two: gamma'(p, r) for p, r >= 1, both (p, r) and (r, p) stored.
struct DiagonalLcu {
  int index_bits = 0;
  int electrons = 0;
  double zero_cutoff = kDefaultZeroCutoff;
  OneBodyCoefficients one;
  ZPairCoefficients two;
  /// (omega_00, gamma_00) before removal.
  double identity_one = 0.0;
  double identity_two = 0.0;

  std::size_t dim() const noexcept { return std::size_t{1} << index_bits; }
  /// N omega_00 + N(N-1)/2 gamma_00.
  double identity_shift() const noexcept;
};

/// gamma = H V H / D^2 with H the unnormalized Walsh-Hadamard matrix, computed
/// by transforming rows then columns. Exactly symmetric.
RealMatrix diagonal_gamma(const RealMatrix& v);

/// Throws std::invalid_argument for N < 2.
DiagonalLcu decompose_diagonal(const DiagonalHamiltonian& h, int electrons,
                               double zero_cutoff = kDefaultZeroCutoff);

struct NormBreakdown {
  double lambda_T = 0.0;
  double lambda_U = 0.0;
  double lambda_V = 0.0;
  double lambda_1 = 0.0;
  double lambda_2 = 0.0;
  double lambda_total = 0.0;
};

/// lambda_T, lambda_U: N sum |omega| over non-identity strings of the kinetic
/// and external parts decomposed separately. lambda_V: N(N-1)/2 sum |gamma|
/// over all non-identity (p, r), so the (N-1) gamma(0, q) one-body cross term
/// is attributed to V. lambda_1, lambda_2 come from the combined canonical LCU.
NormBreakdown norm_breakdown(const DiagonalHamiltonian& h, int electrons,
                             double zero_cutoff = kDefaultZeroCutoff);
NormBreakdown norm_breakdown(const DiagonalHamiltonian& h, const DiagonalLcu& lcu);

/// Number of distinct nonzero block-encoding coefficients a(p, q, r):
/// nnz(one) + #{q <= r : gamma'(q, r) != 0}. Throws std::logic_error if the
/// result exceeds D^2 + D(D+1)/2.
std::size_t count_diagonal_L(const DiagonalLcu& lcu);

constexpr std::size_t max_diagonal_L(std::size_t d) { return d * d + d * (d + 1) / 2; }

}  // namespace fqlcu
