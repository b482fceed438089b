// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/pauli_lcu.hpp"

namespace fqlcu {

enum class LcuKind : std::uint8_t { general = 0, diagonal = 1 };

/// One block-encoding coefficient. General kind packs (p, q, r, s) into 4M
/// bits, diagonal kind packs (p, q, r) into 3M bits, most significant first.
struct LcuEntry {
  std::uint64_t index = 0;
  double coefficient = 0.0;
  friend bool operator==(const LcuEntry&, const LcuEntry&) = default;
};

/// Flat list of block-encoding coefficients a_l in ascending index order.
class SparseLcu {
 public:
  SparseLcu() = default;
  /// Sorts by index, drops exact zeros, rejects duplicate indices.
  SparseLcu(LcuKind kind, int electrons, int index_bits, std::vector<LcuEntry> entries);

  LcuKind kind() const noexcept { return kind_; }
  int electrons() const noexcept { return electrons_; }
  int index_bits() const noexcept { return index_bits_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<LcuEntry>& entries() const noexcept { return entries_; }
  double sum_abs() const noexcept { return sum_abs_; }
  /// N(N-1) sum |a_l|, the subnormalization of the block encoding.
  double block_lambda() const noexcept;

  /// (p, q, r, s) for general kind, (p, q, r, 0) for diagonal kind.
  std::array<std::uint32_t, 4> unpack(std::uint64_t index) const noexcept;
  std::uint64_t pack(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                     std::uint32_t s = 0) const noexcept;

  friend bool operator==(const SparseLcu&, const SparseLcu&) = default;

 private:
  LcuKind kind_ = LcuKind::general;
  int electrons_ = 0;
  int index_bits_ = 0;
  std::vector<LcuEntry> entries_;
  double sum_abs_ = 0.0;
};

/// One-body terms at (p, q, 0, 0) with a = omega'_pq / (N-1); two-body terms at
/// (p, q, r, s) with a = omega'/2 when (p, q) == (r, s) and a = omega' otherwise.
SparseLcu assemble_general(const CanonicalLcu& lcu);

/// a(p, q, 0) = omega'_pq / (N-1); a(0, q, r) = gamma'_qr for 0 < q < r;
/// a(0, q, q) = gamma'_qq / 2.
SparseLcu assemble_diagonal(const DiagonalLcu& lcu);

/// Removes the longest prefix of entries, ordered by ascending |a| with ties
/// broken by index, whose N(N-1)-weighted absolute sum is <= norm_budget.
/// Throws std::invalid_argument for a negative budget.
SparseLcu truncate(const SparseLcu& s, double norm_budget);

/// Binary form: 16-byte header ("FQLCU1\0\0", kind byte, M byte, N as int32,
/// two reserved zero bytes) then (uint64 index, float64 value) records, all
/// little-endian.
void write_binary(std::ostream& out, const SparseLcu& s);
SparseLcu read_binary(std::istream& in);
void save_binary(const std::filesystem::path& path, const SparseLcu& s);
SparseLcu load_binary(const std::filesystem::path& path);

}  // namespace fqlcu
