// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/report.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "fqlcu/coefficient_io.hpp"

namespace fqlcu {

std::string slug(const std::string& label) {
  std::string out;
  bool gap = false;
  for (unsigned char c : label) {
    if (std::isalnum(c)) {
      if (gap && !out.empty()) out += '_';
      out += static_cast<char>(std::tolower(c));
      gap = false;
    } else {
      gap = true;
    }
  }
  return out;
}

void write_summary_report(std::ostream& out, const LcuSummary& s) {
  out << "lambda_one = " << format_double(s.lambda_one) << '\n'
      << "lambda_two = " << format_double(s.lambda_two) << '\n'
      << "lambda_total = " << format_double(s.lambda_total) << '\n'
      << "nnz_one = " << s.nnz_one << '\n'
      << "nnz_two_unique = " << s.nnz_two_unique << '\n'
      << "identity_shift = " << format_double(s.identity_shift) << '\n';
}

void write_norm_report(std::ostream& out, const NormBreakdown& b) {
  out << "lambda_T = " << format_double(b.lambda_T) << '\n'
      << "lambda_U = " << format_double(b.lambda_U) << '\n'
      << "lambda_V = " << format_double(b.lambda_V) << '\n'
      << "lambda_1 = " << format_double(b.lambda_1) << '\n'
      << "lambda_2 = " << format_double(b.lambda_2) << '\n'
      << "lambda_total = " << format_double(b.lambda_total) << '\n';
}

void write_estimate_report(std::ostream& out, const ResourceEstimate& e) {
  out << "kind = " << to_string(e.kind) << '\n'
      << "electrons = " << e.electrons << '\n'
      << "index_bits = " << e.index_bits << '\n'
      << "basis_size = " << (std::uint64_t{1} << e.index_bits) << '\n'
      << "mode = " << to_string(e.mode) << '\n'
      << "eps_qpe = " << format_double(e.eps_qpe) << '\n'
      << "eps_trunc = " << format_double(e.eps_trunc) << '\n'
      << "eps_prep = " << format_double(e.eps_prep) << '\n'
      << "lambda = " << format_double(e.lambda) << '\n'
      << "L = " << e.l << '\n'
      << "aleph = " << e.aleph << '\n'
      << "m = " << e.m << '\n'
      << "kappa1 = " << e.kappa1 << '\n'
      << "kappa2 = " << e.kappa2 << '\n';
  for (const auto& r : e.rows) {
    const std::string key = "row." + slug(r.label);
    out << key << ".toffolis = " << r.toffolis << '\n'
        << key << ".qubits = " << r.qubits << '\n';
  }
  out << "repetitions = " << e.repetitions << '\n'
      << "walk_toffolis = " << e.walk_toffolis << '\n'
      << "step_toffolis = " << e.step_toffolis << '\n'
      << "total_toffolis = " << e.total_toffolis << '\n'
      << "logical_qubits = " << e.logical_qubits << '\n'
      << "physical_qubits = "
      << (e.physical_qubits ? format_double(*e.physical_qubits) : std::string("n/a")) << '\n';
}

std::map<std::string, std::string> parse_keyed_text(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return kv;
}

std::string estimate_csv_header() {
  return "kind,N,M,mode,lambda,L,aleph,m,kappa1,kappa2,repetitions,step_toffolis,"
         "total_toffolis,logical_qubits";
}

std::string estimate_csv_row(const ResourceEstimate& e) {
  std::ostringstream s;
  s << to_string(e.kind) << ',' << e.electrons << ',' << e.index_bits << ','
    << to_string(e.mode) << ',' << format_double(e.lambda) << ',' << e.l << ','
    << e.aleph << ',' << e.m << ',' << e.kappa1 << ',' << e.kappa2 << ','
    << e.repetitions << ',' << e.step_toffolis << ',' << e.total_toffolis << ','
    << e.logical_qubits;
  return s.str();
}

}  // namespace fqlcu
