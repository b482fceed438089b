// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fqlcu/bits.hpp"
#include "fqlcu/errors.hpp"

namespace fqlcu {

namespace {

int checked_index_bits(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw UnsupportedDimensionError(
        "basis dimension " + std::to_string(dim) +
        " is not a power of two; Pauli decomposition needs D = 2^M");
  }
  return exact_log2(dim);
}

}  // namespace

bool RealMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool RealTensor4::has_pair_exchange_symmetry() const {
  const std::size_t n = dim_;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if ((*this)(p, q, r, s) != (*this)(r, s, p, q)) return false;
  return true;
}

bool RealTensor4::has_eightfold_symmetry() const {
  const std::size_t n = dim_;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = (*this)(p, q, r, s);
          if (v != (*this)(q, p, r, s) || v != (*this)(p, q, s, r) ||
              v != (*this)(q, p, s, r) || v != (*this)(r, s, p, q) ||
              v != (*this)(s, r, p, q) || v != (*this)(r, s, q, p) ||
              v != (*this)(s, r, q, p)) {
            return false;
          }
        }
  return true;
}

GeneralHamiltonian::GeneralHamiltonian(RealMatrix one_body, RealTensor4 two_body,
                                       double core_energy)
    : one_body_(std::move(one_body)),
      two_body_(std::move(two_body)),
      core_energy_(core_energy),
      index_bits_(checked_index_bits(one_body_.dim())) {
  if (two_body_.dim() != one_body_.dim()) {
    throw std::invalid_argument("one- and two-body dimensions differ");
  }
  if (!one_body_.is_symmetric()) {
    throw std::invalid_argument("one-body matrix is not symmetric");
  }
  if (!two_body_.has_eightfold_symmetry()) {
    throw std::invalid_argument("two-body tensor lacks eightfold symmetry");
  }
}

DiagonalHamiltonian::DiagonalHamiltonian(RealMatrix kinetic, RealMatrix external,
                                         RealMatrix coulomb)
    : kinetic_(std::move(kinetic)),
      external_(std::move(external)),
      coulomb_(std::move(coulomb)),
      index_bits_(checked_index_bits(kinetic_.dim())) {
  if (external_.dim() != kinetic_.dim() || coulomb_.dim() != kinetic_.dim()) {
    throw std::invalid_argument("diagonal Hamiltonian matrices differ in size");
  }
  if (!kinetic_.is_symmetric() || !external_.is_symmetric() ||
      !coulomb_.is_symmetric()) {
    throw std::invalid_argument("diagonal Hamiltonian matrices must be symmetric");
  }
}

RealMatrix DiagonalHamiltonian::one_body() const {
  RealMatrix t(dim());
  auto out = t.data();
  auto kin = kinetic_.data();
  auto ext = external_.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = kin[i] + ext[i];
  return t;
}

CellSpec CellSpec::uniform_electron_gas(int electrons, double wigner_seitz_radius,
                                        int grid_side) {
  if (electrons < 1 || wigner_seitz_radius <= 0.0 || grid_side < 1) {
    throw std::invalid_argument("uniform electron gas needs N >= 1, r_s > 0, grid >= 1");
  }
  CellSpec cell;
  cell.electrons = electrons;
  cell.wigner_seitz_radius = wigner_seitz_radius;
  cell.volume = 4.0 * std::numbers::pi / 3.0 * std::pow(wigner_seitz_radius, 3) *
                electrons;
  cell.grid_side = grid_side;
  return cell;
}

CellSpec CellSpec::with_volume(int electrons, double volume, int grid_side) {
  if (electrons < 1 || grid_side < 1) {
    throw std::invalid_argument("cell needs N >= 1 and grid >= 1");
  }
  if (!(volume > 0.0)) throw std::invalid_argument("cell volume must be positive");
  CellSpec cell;
  cell.electrons = electrons;
  cell.volume = volume;
  cell.wigner_seitz_radius = std::cbrt(3.0 * volume / (4.0 * std::numbers::pi * electrons));
  cell.grid_side = grid_side;
  return cell;
}

double CellSpec::box_length() const { return std::cbrt(volume); }

}  // namespace fqlcu
