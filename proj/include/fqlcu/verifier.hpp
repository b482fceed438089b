// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>

#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/hamiltonian.hpp"
#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/sparse_lcu.hpp"

namespace fqlcu {

/// Largest N M accepted by the dense oracles.
inline constexpr int kMaxOracleQubits = 12;

/// Dense operator on N electron registers of M qubits each. Qubit i M + k
/// carries bit k of electron i's orbital index; qubit 0 is the leftmost
/// Kronecker factor (most significant bit of the basis index).
struct DenseOperator {
  int electrons = 0;
  int index_bits = 0;
  Eigen::MatrixXcd matrix;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

/// Throws GuardExceededError when N M > kMaxOracleQubits and
/// std::invalid_argument when N < 2.
void check_oracle_size(int electrons, int index_bits);

/// Orbital index of electron i in computational basis state x.
std::size_t orbital_of(std::size_t x, int electron, int electrons, int index_bits);

/// Literal product of 2x2 X and Z factors: the D x D matrix of X^p Z^q.
Eigen::MatrixXcd pauli_string_matrix(int index_bits, std::uint32_t p, std::uint32_t q);

/// sum_i sum_pq h_pq |p><q|_i + 1/2 sum_{i != j} sum_pqrs h_pqrs |p><q|_i |r><s|_j.
/// The core energy is not included.
DenseOperator build_first_quantized(const GeneralHamiltonian& h, int electrons);
/// sum_i sum_pq T_pq |p><q|_i + 1/2 sum_{i != j} sum_pr V_pr |p><p|_i |r><r|_j.
DenseOperator build_first_quantized(const DiagonalHamiltonian& h, int electrons);

/// Sums every stored string with its multiplicity and adds the identity shift.
DenseOperator reconstruct_from_lcu(const CanonicalLcu& lcu);
DenseOperator reconstruct_from_lcu(const DiagonalLcu& lcu);
/// sum_{i != j} sum_l a_l U_l(i, j) + identity_shift I.
DenseOperator reconstruct_from_sparse(const SparseLcu& s, double identity_shift);

double max_abs_deviation(const DenseOperator& a, const DenseOperator& b);
/// max |A - A^dagger|.
double hermiticity_defect(const DenseOperator& a);
/// Ascending eigenvalues of the Hermitian part.
Eigen::VectorXd eigenvalues(const DenseOperator& a);
/// max_k |eig_k(a) - eig_k(b)| over ascending spectra.
double max_eigenvalue_displacement(const DenseOperator& a, const DenseOperator& b);

}  // namespace fqlcu
