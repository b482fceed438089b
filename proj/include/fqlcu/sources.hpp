// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>

#include "fqlcu/hamiltonian.hpp"

namespace fqlcu {

/// Contents of an FCIDUMP file. NELEC is optional in the header.
struct FcidumpData {
  GeneralHamiltonian hamiltonian;
  std::optional<int> electrons;
};

/// Parses FCIDUMP text: an optional &FCI ... &END (or /) namelist header
/// declaring NORB, then "value i j k l" records with 1-based indices in
/// chemists' notation. k = l = 0 records are one-body, all-zero indices the
/// core energy; i > 0, j = k = l = 0 (orbital energies) are skipped. Declared
/// symmetries are expanded. Throws ParseError (with line number) on malformed
/// input and UnsupportedDimensionError when NORB is not a power of two.
FcidumpData read_fcidump(std::istream& in);
FcidumpData load_fcidump(const std::filesystem::path& path);

/// Writes the symmetry-unique nonzeros in shortest round-trip precision.
void write_fcidump(std::ostream& out, const GeneralHamiltonian& h,
                   std::optional<int> electrons = std::nullopt);
void save_fcidump(const std::filesystem::path& path, const GeneralHamiltonian& h,
                  std::optional<int> electrons = std::nullopt);

/// Dense real Hamiltonian with uniform(-1, 1) entries: one value per orbit of
/// the symmetry group (two-fold for h1, eightfold for h2), copied to every
/// member of the orbit. Deterministic in seed.
GeneralHamiltonian gen_random_dense(std::size_t dim, std::uint64_t seed);

/// Uniform electron gas in dual plane waves on cell.grid_side^3 points.
/// kinetic(p, q) = (1/D) sum_nu (k_nu^2 / 2) cos(k_nu . (r_p - r_q)),
/// coulomb(p, r) = (2 pi / volume) sum_{nu != 0} cos(k_nu . (r_p - r_r)) / k_nu^2,
/// with k_nu = 2 pi nu / L_box and nu_i in [-n/2, n/2); external = 0.
DiagonalHamiltonian gen_ueg_dpw(const CellSpec& cell);

/// As gen_ueg_dpw plus the external potential of point charges,
/// U_p = -(4 pi / volume) sum_j Z_j sum_{nu != 0} cos(k_nu . (R_j - r_p)) / k_nu^2
/// on the diagonal.
DiagonalHamiltonian gen_material_dpw(const CellSpec& cell,
                                     std::span<const PointCharge> charges);

/// Real-space grid point r_p for the dual-plane-wave index p = (x n + y) n + z.
std::array<double, 3> grid_point(const CellSpec& cell, std::size_t p);

}  // namespace fqlcu
