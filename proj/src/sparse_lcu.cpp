// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/sparse_lcu.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "fqlcu/errors.hpp"

namespace fqlcu {

namespace {

constexpr char kMagic[8] = {'F', 'Q', 'L', 'C', 'U', '1', '\0', '\0'};

void check_electrons(int n) {
  if (n < 2) throw std::invalid_argument("block encoding needs N >= 2 electrons");
}

void put_le(std::ostream& out, std::uint64_t v, int bytes) {
  char buf[8];
  for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, bytes);
}

std::uint64_t get_le(const unsigned char* p, int bytes) {
  std::uint64_t v = 0;
  for (int i = bytes; i-- > 0;) v = (v << 8) | p[i];
  return v;
}

}  // namespace

SparseLcu::SparseLcu(LcuKind kind, int electrons, int index_bits,
                     std::vector<LcuEntry> entries)
    : kind_(kind), electrons_(electrons), index_bits_(index_bits) {
  check_electrons(electrons);
  const int fields = kind == LcuKind::general ? 4 : 3;
  if (index_bits < 0 || index_bits * fields > 64) {
    throw std::invalid_argument("index width does not fit a 64-bit key");
  }
  std::erase_if(entries, [](const LcuEntry& e) { return e.coefficient == 0.0; });
  std::sort(entries.begin(), entries.end(),
            [](const LcuEntry& a, const LcuEntry& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].index == entries[i - 1].index) {
      throw std::invalid_argument("duplicate block-encoding index");
    }
  }
  entries_ = std::move(entries);
  CompensatedSum s;
  for (const auto& e : entries_) s.add(std::fabs(e.coefficient));
  sum_abs_ = s.value();
}

double SparseLcu::block_lambda() const noexcept {
  const double n = electrons_;
  return n * (n - 1.0) * sum_abs_;
}

std::array<std::uint32_t, 4> SparseLcu::unpack(std::uint64_t index) const noexcept {
  const int m = index_bits_;
  const std::uint64_t mask = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
  std::array<std::uint32_t, 4> k{};
  const int fields = kind_ == LcuKind::general ? 4 : 3;
  for (int i = fields; i-- > 0;) {
    k[i] = static_cast<std::uint32_t>(index & mask);
    index = m == 0 ? 0 : index >> m;
  }
  return k;
}

std::uint64_t SparseLcu::pack(std::uint32_t p, std::uint32_t q, std::uint32_t r,
                              std::uint32_t s) const noexcept {
  const int m = index_bits_;
  if (m == 0) return 0;
  std::uint64_t v = ((std::uint64_t{p} << m | q) << m) | r;
  if (kind_ == LcuKind::general) v = (v << m) | s;
  return v;
}

SparseLcu assemble_general(const CanonicalLcu& lcu) {
  check_electrons(lcu.electrons);
  const int m = lcu.index_bits;
  const std::uint64_t pair_mask = (std::uint64_t{1} << (2 * m)) - 1;
  const double fold = static_cast<double>(lcu.electrons - 1);
  std::vector<LcuEntry> entries;
  entries.reserve(lcu.one.size() + lcu.two.size());
  for (const auto& [key, w] : lcu.one) entries.push_back({key << (2 * m), w / fold});
  for (const auto& [key, w] : lcu.two) {
    const bool diagonal = (key >> (2 * m)) == (key & pair_mask);
    entries.push_back({key, diagonal ? 0.5 * w : w});
  }
  return SparseLcu(LcuKind::general, lcu.electrons, m, std::move(entries));
}

SparseLcu assemble_diagonal(const DiagonalLcu& lcu) {
  check_electrons(lcu.electrons);
  const int m = lcu.index_bits;
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const double fold = static_cast<double>(lcu.electrons - 1);
  std::vector<LcuEntry> entries;
  entries.reserve(lcu.one.size() + lcu.two.size());
  for (const auto& [key, w] : lcu.one) entries.push_back({key << m, w / fold});
  for (const auto& [key, w] : lcu.two) {
    const std::uint64_t q = key >> m;
    const std::uint64_t r = key & mask;
    if (q < r) {
      entries.push_back({key, w});
    } else if (q == r) {
      entries.push_back({key, 0.5 * w});
    }
  }
  return SparseLcu(LcuKind::diagonal, lcu.electrons, m, std::move(entries));
}

SparseLcu truncate(const SparseLcu& s, double norm_budget) {
  if (!(norm_budget >= 0.0)) throw std::invalid_argument("norm budget must be >= 0");
  const auto& e = s.entries();
  std::vector<std::size_t> order(e.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double x = std::fabs(e[a].coefficient);
    const double y = std::fabs(e[b].coefficient);
    return x != y ? x < y : e[a].index < e[b].index;
  });
  const double n = s.electrons();
  const double weight = n * (n - 1.0);
  std::vector<bool> removed(e.size(), false);
  CompensatedSum dropped;
  for (std::size_t i : order) {
    CompensatedSum next = dropped;
    next.add(weight * std::fabs(e[i].coefficient));
    if (next.value() > norm_budget) break;
    dropped = next;
    removed[i] = true;
  }
  std::vector<LcuEntry> kept;
  kept.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!removed[i]) kept.push_back(e[i]);
  }
  return SparseLcu(s.kind(), s.electrons(), s.index_bits(), std::move(kept));
}

void write_binary(std::ostream& out, const SparseLcu& s) {
  out.write(kMagic, sizeof kMagic);
  const char kind = static_cast<char>(s.kind());
  const char m = static_cast<char>(s.index_bits());
  out.put(kind);
  out.put(m);
  put_le(out, static_cast<std::uint32_t>(s.electrons()), 4);
  put_le(out, 0, 2);
  for (const auto& e : s.entries()) {
    put_le(out, e.index, 8);
    put_le(out, std::bit_cast<std::uint64_t>(e.coefficient), 8);
  }
  if (!out) throw std::runtime_error("failed writing coefficient list");
}

SparseLcu read_binary(std::istream& in) {
  unsigned char header[16];
  if (!in.read(reinterpret_cast<char*>(header), sizeof header)) {
    throw std::runtime_error("coefficient list too short for header");
  }
  if (std::memcmp(header, kMagic, sizeof kMagic) != 0) {
    throw std::runtime_error("bad coefficient list magic");
  }
  if (header[8] > 1) throw std::runtime_error("unknown coefficient list kind");
  const auto kind = static_cast<LcuKind>(header[8]);
  const int m = header[9];
  const auto n = static_cast<std::int32_t>(get_le(header + 10, 4));
  std::vector<LcuEntry> entries;
  unsigned char rec[16];
  while (in.read(reinterpret_cast<char*>(rec), sizeof rec)) {
    entries.push_back({get_le(rec, 8), std::bit_cast<double>(get_le(rec + 8, 8))});
  }
  if (in.gcount() != 0) throw std::runtime_error("truncated coefficient record");
  return SparseLcu(kind, n, m, std::move(entries));
}

void save_binary(const std::filesystem::path& path, const SparseLcu& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_binary(out, s);
}

SparseLcu load_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_binary(in);
}

}  // namespace fqlcu
