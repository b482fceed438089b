// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fqlcu {

/// Compensated (Neumaier) summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// One-register string X^p Z^q, stored as (p, q).
using PauliKey1 = std::array<std::uint32_t, 2>;
/// Two-register string X^p Z^q (x) X^r Z^s, stored as (p, q, r, s).
using PauliKey2 = std::array<std::uint32_t, 4>;

/// Sorted sparse map from Arity-tuples of M-bit indices to real coefficients.
/// Tuples are bit-packed most significant index first, so packed order is
/// lexicographic tuple order.
template <std::size_t Arity>
class SparseCoefficients {
  static_assert(Arity >= 1 && Arity <= 4);

 public:
  using Key = std::array<std::uint32_t, Arity>;
  using Entry = std::pair<std::uint64_t, double>;

  SparseCoefficients() = default;
  explicit SparseCoefficients(int index_bits) : index_bits_(index_bits) {
    if (index_bits < 0 || index_bits * static_cast<int>(Arity) > 64) {
      throw std::invalid_argument("index width does not fit a 64-bit key");
    }
  }

  /// Sorts and sums duplicate keys.
  static SparseCoefficients from_entries(int index_bits, std::vector<Entry> entries) {
    SparseCoefficients out(index_bits);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (const auto& e : entries) {
      if (!out.entries_.empty() && out.entries_.back().first == e.first) {
        out.entries_.back().second += e.second;
      } else {
        out.entries_.push_back(e);
      }
    }
    return out;
  }
  static SparseCoefficients from_keys(int index_bits,
                                      std::initializer_list<std::pair<Key, double>> items) {
    SparseCoefficients tmp(index_bits);
    std::vector<Entry> e;
    for (const auto& [k, v] : items) e.emplace_back(tmp.pack(k), v);
    return from_entries(index_bits, std::move(e));
  }

  int index_bits() const noexcept { return index_bits_; }
  std::size_t dim() const noexcept { return std::size_t{1} << index_bits_; }

  std::uint64_t pack(const Key& k) const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < Arity; ++i) {
      v = index_bits_ == 0 ? 0 : (v << index_bits_) | k[i];
    }
    return v;
  }
  Key unpack(std::uint64_t v) const noexcept {
    Key k{};
    if (index_bits_ == 0) return k;
    const std::uint64_t mask = (std::uint64_t{1} << index_bits_) - 1;
    for (std::size_t i = Arity; i-- > 0;) {
      k[i] = static_cast<std::uint32_t>(v & mask);
      v >>= index_bits_;
    }
    return k;
  }

  /// Appends a key strictly greater than the current last key.
  void append(std::uint64_t packed, double value) {
    if (!entries_.empty() && entries_.back().first >= packed) {
      throw std::logic_error("SparseCoefficients::append out of order");
    }
    entries_.emplace_back(packed, value);
  }
  void append(const Key& k, double value) { append(pack(k), value); }

  /// Coefficient for a key, zero when absent.
  double value(std::uint64_t packed) const noexcept {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), packed,
        [](const Entry& e, std::uint64_t k) { return e.first < k; });
    return it != entries_.end() && it->first == packed ? it->second : 0.0;
  }
  double value(const Key& k) const noexcept { return value(pack(k)); }
  bool contains(const Key& k) const noexcept {
    const auto packed = pack(k);
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), packed,
        [](const Entry& e, std::uint64_t key) { return e.first < key; });
    return it != entries_.end() && it->first == packed;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  double abs_sum() const noexcept {
    CompensatedSum s;
    for (const auto& e : entries_) s.add(std::fabs(e.second));
    return s.value();
  }

  friend bool operator==(const SparseCoefficients&, const SparseCoefficients&) = default;

 private:
  int index_bits_ = 0;
  std::vector<Entry> entries_;
};

using OneBodyCoefficients = SparseCoefficients<2>;
using TwoBodyCoefficients = SparseCoefficients<4>;

}  // namespace fqlcu
