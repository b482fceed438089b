// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace fqlcu {

/// Dense row-major square matrix of doubles.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  /// Exact (bitwise value) symmetry test.
  bool is_symmetric() const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Dense rank-4 tensor h[p][q][r][s], all extents equal to dim.
class RealTensor4 {
 public:
  RealTensor4() = default;
  explicit RealTensor4(std::size_t dim)
      : dim_(dim), data_(dim * dim * dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }

  std::size_t offset(std::size_t p, std::size_t q, std::size_t r,
                     std::size_t s) const noexcept {
    return ((p * dim_ + q) * dim_ + r) * dim_ + s;
  }
  double& operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return data_[offset(p, q, r, s)];
  }
  double operator()(std::size_t p, std::size_t q, std::size_t r,
                    std::size_t s) const {
    return data_[offset(p, q, r, s)];
  }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  /// h[p][q][r][s] == h[r][s][p][q] for all indices, compared exactly.
  bool has_pair_exchange_symmetry() const;
  /// All seven nontrivial index permutations of the real-orbital group.
  bool has_eightfold_symmetry() const;

  friend bool operator==(const RealTensor4&, const RealTensor4&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// One- and two-body matrix elements (Hartree) over D = 2^M real orbitals.
/// Two-body elements are in chemists' order, h2(p,q,r,s) = (pq|rs).
class GeneralHamiltonian {
 public:
  /// Validates: D is a power of two, h1 symmetric, h2 eightfold symmetric.
  /// Throws UnsupportedDimensionError or std::invalid_argument.
  GeneralHamiltonian(RealMatrix one_body, RealTensor4 two_body,
                     double core_energy = 0.0);

  std::size_t dim() const noexcept { return one_body_.dim(); }
  int index_bits() const noexcept { return index_bits_; }
  const RealMatrix& one_body() const noexcept { return one_body_; }
  const RealTensor4& two_body() const noexcept { return two_body_; }
  /// Constant (nuclear repulsion / frozen core); never decomposed.
  double core_energy() const noexcept { return core_energy_; }

 private:
  RealMatrix one_body_;
  RealTensor4 two_body_;
  double core_energy_;
  int index_bits_;
};

/// Hamiltonian with a Coulomb interaction diagonal in the basis:
/// one-body T = kinetic + external, two-body V[p][r] on |p><p| x |r><r|.
class DiagonalHamiltonian {
 public:
  /// All three matrices must share a power-of-two dimension and be symmetric.
  DiagonalHamiltonian(RealMatrix kinetic, RealMatrix external, RealMatrix coulomb);

  std::size_t dim() const noexcept { return kinetic_.dim(); }
  int index_bits() const noexcept { return index_bits_; }
  const RealMatrix& kinetic() const noexcept { return kinetic_; }
  const RealMatrix& external() const noexcept { return external_; }
  const RealMatrix& coulomb() const noexcept { return coulomb_; }
  RealMatrix one_body() const;

 private:
  RealMatrix kinetic_;
  RealMatrix external_;
  RealMatrix coulomb_;
  int index_bits_;
};

/// Periodic cubic simulation cell sampled by a grid_side^3 real-space grid.
struct CellSpec {
  int electrons = 0;
  double wigner_seitz_radius = 0.0;  // Bohr
  double volume = 0.0;               // Bohr^3
  int grid_side = 0;

  /// Uniform electron gas: volume = (4 pi / 3) r_s^3 N.
  static CellSpec uniform_electron_gas(int electrons, double wigner_seitz_radius,
                                       int grid_side);
  /// Cell of given volume; r_s is derived from the electron density.
  static CellSpec with_volume(int electrons, double volume, int grid_side);

  std::size_t basis_size() const {
    const auto n = static_cast<std::size_t>(grid_side);
    return n * n * n;
  }
  double box_length() const;
};

/// Nuclear (or pseudo-ion) point charge at a Cartesian position in Bohr.
struct PointCharge {
  double charge = 0.0;
  std::array<double, 3> position{};
};

}  // namespace fqlcu
