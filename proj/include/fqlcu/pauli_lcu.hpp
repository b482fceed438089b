// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "fqlcu/hamiltonian.hpp"
#include "fqlcu/pauli_keys.hpp"

namespace fqlcu {

/// Magnitude at or below which a coefficient is treated as zero (Hartree).
inline constexpr double kDefaultZeroCutoff = 1e-10;

/// omega(p, q) = (1/D) sum_a h1[p ^ a][a] H[a][q] with H the unnormalized
/// Walsh-Hadamard matrix; key (p, q) is the string X^p Z^q.
OneBodyCoefficients decompose_one_body(const RealMatrix& h1,
                                       double zero_cutoff = kDefaultZeroCutoff);

/// omega(g, u, f, v) = (1/D^2) sum_{q,s} h2[g ^ q][q][f ^ s][s] H[q][u] H[s][v],
/// evaluated one g-block of D rows of length D^2 at a time. When h2 is exactly
/// pair-exchange symmetric the result satisfies omega(p,q,r,s) == omega(r,s,p,q)
/// bit for bit.
TwoBodyCoefficients decompose_two_body(const RealTensor4& h2,
                                       double zero_cutoff = kDefaultZeroCutoff);

/// Inverse transforms; absent keys are zero.
RealMatrix inverse_one_body(const OneBodyCoefficients& coeffs);
RealTensor4 inverse_two_body(const TwoBodyCoefficients& coeffs);

/// Canonicalized Pauli LCU of a first-quantized Hamiltonian for N electrons.
/// one: omega'(p, q) with (0, 0) removed. two: omega'(p, q, r, s) stored once at
/// the representative (p, q) <= (r, s), with the identity on either register
/// removed; the value is the pair average (omega_pqrs + omega_rspq) / 2, which
/// is omega_pqrs itself for symmetric input.
struct CanonicalLcu {
  int index_bits = 0;
  int electrons = 0;
  double zero_cutoff = kDefaultZeroCutoff;
  OneBodyCoefficients one;
  TwoBodyCoefficients two;
  /// (omega_00, omega_0000) before removal.
  double identity_one = 0.0;
  double identity_two = 0.0;
  /// Exact two-fold symmetry of the raw two-body input.
  bool two_fold_symmetric = true;

  std::size_t dim() const noexcept { return std::size_t{1} << index_bits; }
  /// N omega_00 + N(N-1)/2 omega_0000.
  double identity_shift() const noexcept;
};

/// omega'(p, q) = omega(p, q) + (N-1)/2 (omega(p,q,0,0) + omega(0,0,p,q)).
/// Throws std::invalid_argument for N < 2.
CanonicalLcu canonicalize(const OneBodyCoefficients& one_raw,
                          const TwoBodyCoefficients& two_raw, int electrons,
                          double zero_cutoff = kDefaultZeroCutoff);

/// decompose_one_body + decompose_two_body + canonicalize.
CanonicalLcu decompose(const GeneralHamiltonian& h, int electrons,
                       double zero_cutoff = kDefaultZeroCutoff);

struct LcuSummary {
  double lambda_one = 0.0;    // N sum |omega'_pq|
  double lambda_two = 0.0;    // N(N-1)/2 sum over all (p,q,r,s) of |omega'_pqrs|
  double lambda_total = 0.0;  // lambda_one + lambda_two
  std::size_t nnz_one = 0;
  std::size_t nnz_two_unique = 0;
  double identity_shift = 0.0;
};

LcuSummary one_norm(const CanonicalLcu& lcu);

/// Upper bounds on the unique nonzero counts for real orbitals.
constexpr std::size_t max_unique_one_body(std::size_t d) { return d * (d + 1) / 2; }
constexpr std::size_t max_unique_two_body(std::size_t d) {
  return d * (d + 1) * (d - 1) * (d + 2) / 8;
}

}  // namespace fqlcu
