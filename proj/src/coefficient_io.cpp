// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/coefficient_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <vector>

#include "fqlcu/errors.hpp"

namespace fqlcu {

namespace {

template <std::size_t Arity>
void write_csv(std::ostream& out, const SparseCoefficients<Arity>& c, const char* header) {
  out << header << '\n';
  for (const auto& [key, w] : c) {
    for (auto i : c.unpack(key)) out << i << ',';
    out << format_double(w) << '\n';
  }
}

template <std::size_t Arity>
SparseCoefficients<Arity> read_csv(std::istream& in, int index_bits) {
  SparseCoefficients<Arity> proto(index_bits);
  std::vector<typename SparseCoefficients<Arity>::Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  const std::uint64_t dim = std::uint64_t{1} << index_bits;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line_no == 1 && line.front() == 'p') continue;
    typename SparseCoefficients<Arity>::Key key{};
    const char* p = line.data();
    const char* end = p + line.size();
    for (std::size_t i = 0; i < Arity; ++i) {
      auto [ptr, ec] = std::from_chars(p, end, key[i]);
      if (ec != std::errc() || ptr == end || *ptr != ',' || key[i] >= dim) {
        throw ParseError(line_no, "bad index field");
      }
      p = ptr + 1;
    }
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(p, end, w);
    if (ec != std::errc() || ptr != end) throw ParseError(line_no, "bad value field");
    entries.emplace_back(proto.pack(key), w);
  }
  return SparseCoefficients<Arity>::from_entries(index_bits, std::move(entries));
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_one_body_csv(std::ostream& out, const OneBodyCoefficients& c) {
  write_csv(out, c, "p,q,value");
}
void write_two_body_csv(std::ostream& out, const TwoBodyCoefficients& c) {
  write_csv(out, c, "p,q,r,s,value");
}
void write_z_pair_csv(std::ostream& out, const ZPairCoefficients& c) {
  write_csv(out, c, "p,r,value");
}

OneBodyCoefficients read_one_body_csv(std::istream& in, int index_bits) {
  return read_csv<2>(in, index_bits);
}
TwoBodyCoefficients read_two_body_csv(std::istream& in, int index_bits) {
  return read_csv<4>(in, index_bits);
}
ZPairCoefficients read_z_pair_csv(std::istream& in, int index_bits) {
  return read_csv<2>(in, index_bits);
}

}  // namespace fqlcu
