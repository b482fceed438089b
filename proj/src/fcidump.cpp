// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "fqlcu/bits.hpp"
#include "fqlcu/errors.hpp"
#include "fqlcu/sources.hpp"

namespace fqlcu {

namespace {

struct Record {
  double value;
  long i, j, k, l;
  std::size_t line;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

bool parse_double(std::string token, double& out) {
  for (char& c : token) {
    if (c == 'D' || c == 'd') c = 'e';
  }
  if (!token.empty() && token.front() == '+') token.erase(0, 1);
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_index(const std::string& token, long& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::optional<long> header_value(const std::string& header, const std::string& key) {
  const std::regex re("(^|[^A-Z0-9_])" + key + R"(\s*=\s*(-?\d+))");
  std::smatch m;
  if (std::regex_search(header, m, re)) return std::stol(m[2].str());
  return std::nullopt;
}

void put_double(std::ostream& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

}  // namespace

FcidumpData read_fcidump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  std::size_t header_line = 0;
  bool in_header = false;
  bool header_done = false;
  std::vector<Record> records;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!header_done && !in_header && records.empty() && t.front() == '&') {
      in_header = true;
      header_line = line_no;
    }
    if (in_header) {
      const std::string u = upper(t);
      header += ' ' + u;
      const bool ends = u.find("&END") != std::string::npos || u.back() == '/';
      if (ends) {
        in_header = false;
        header_done = true;
      }
      continue;
    }
    if (t.front() == '!' || t.front() == '#') continue;
    std::istringstream fields(t);
    std::vector<std::string> tok;
    for (std::string w; fields >> w;) tok.push_back(w);
    if (tok.size() != 5) {
      throw ParseError(line_no, "expected 'value i j k l', got " +
                                    std::to_string(tok.size()) + " fields");
    }
    Record r{};
    r.line = line_no;
    if (!parse_double(tok[0], r.value)) {
      throw ParseError(line_no, "invalid number '" + tok[0] + "'");
    }
    long* idx[4] = {&r.i, &r.j, &r.k, &r.l};
    for (int a = 0; a < 4; ++a) {
      if (!parse_index(tok[a + 1], *idx[a]) || *idx[a] < 0) {
        throw ParseError(line_no, "invalid orbital index '" + tok[a + 1] + "'");
      }
    }
    records.push_back(r);
  }
  if (in_header) throw ParseError(line_no, "unterminated &FCI header");

  long norb = 0;
  std::optional<int> nelec;
  if (header_done) {
    const auto n = header_value(header, "NORB");
    if (!n) throw ParseError(header_line, "header does not declare NORB");
    if (*n < 1) throw ParseError(header_line, "NORB must be positive");
    norb = *n;
    if (const auto e = header_value(header, "NELEC")) nelec = static_cast<int>(*e);
  } else {
    for (const auto& r : records) norb = std::max({norb, r.i, r.j, r.k, r.l});
    if (norb == 0) throw ParseError(line_no, "no header and no orbital records");
  }
  if (!is_power_of_two(static_cast<std::uint64_t>(norb))) {
    throw UnsupportedDimensionError("NORB = " + std::to_string(norb) +
                                    " is not a power of two");
  }

  const auto d = static_cast<std::size_t>(norb);
  RealMatrix h1(d);
  RealTensor4 h2(d);
  double core = 0.0;
  for (const auto& r : records) {
    if (r.i > norb || r.j > norb || r.k > norb || r.l > norb) {
      throw ParseError(r.line, "orbital index exceeds NORB");
    }
    const int nonzero = (r.i > 0) + (r.j > 0) + (r.k > 0) + (r.l > 0);
    if (nonzero == 0) {
      core = r.value;
    } else if (nonzero == 4) {
      const std::size_t p = r.i - 1, q = r.j - 1, a = r.k - 1, b = r.l - 1;
      h2(p, q, a, b) = r.value;
      h2(q, p, a, b) = r.value;
      h2(p, q, b, a) = r.value;
      h2(q, p, b, a) = r.value;
      h2(a, b, p, q) = r.value;
      h2(b, a, p, q) = r.value;
      h2(a, b, q, p) = r.value;
      h2(b, a, q, p) = r.value;
    } else if (r.i > 0 && r.j > 0 && r.k == 0 && r.l == 0) {
      h1(r.i - 1, r.j - 1) = r.value;
      h1(r.j - 1, r.i - 1) = r.value;
    } else if (r.i > 0 && r.j == 0 && r.k == 0 && r.l == 0) {
      // orbital energy record
    } else {
      throw ParseError(r.line, "unsupported index pattern");
    }
  }
  return FcidumpData{GeneralHamiltonian(std::move(h1), std::move(h2), core), nelec};
}

FcidumpData load_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_fcidump(in);
}

void write_fcidump(std::ostream& out, const GeneralHamiltonian& h,
                   std::optional<int> electrons) {
  const std::size_t d = h.dim();
  out << "&FCI NORB=" << d;
  if (electrons) out << ", NELEC=" << *electrons;
  out << ",\n&END\n";
  const auto& h2 = h.two_body();
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r <= p; ++r)
        for (std::size_t s = 0; s <= (r == p ? q : r); ++s) {
          const double v = h2(p, q, r, s);
          if (v == 0.0) continue;
          put_double(out, v);
          out << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' ' << s + 1 << '\n';
        }
  const auto& h1 = h.one_body();
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = h1(p, q);
      if (v == 0.0) continue;
      put_double(out, v);
      out << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
    }
  put_double(out, h.core_energy());
  out << " 0 0 0 0\n";
}

void save_fcidump(const std::filesystem::path& path, const GeneralHamiltonian& h,
                  std::optional<int> electrons) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_fcidump(out, h, electrons);
}

}  // namespace fqlcu
