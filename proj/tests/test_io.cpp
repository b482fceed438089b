// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "fqlcu/coefficient_io.hpp"
#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/errors.hpp"
#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/report.hpp"
#include "fqlcu/sources.hpp"
#include "fqlcu/sparse_lcu.hpp"

namespace fqlcu {
namespace {

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-3.0), "-3");
  for (double v : {0.1, 1.0 / 3.0, -2.718281828459045e-17, 6.02214076e23,
                   std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
}

TEST(CoefficientCsv, RoundTripsBitExactly) {
  const auto lcu = decompose(gen_random_dense(4, 12), 3);
  std::stringstream one, two;
  write_one_body_csv(one, lcu.one);
  write_two_body_csv(two, lcu.two);
  EXPECT_EQ(one.str().substr(0, 10), "p,q,value\n");
  EXPECT_EQ(two.str().substr(0, 14), "p,q,r,s,value\n");
  EXPECT_EQ(read_one_body_csv(one, 2), lcu.one);
  EXPECT_EQ(read_two_body_csv(two, 2), lcu.two);

  const auto diag = decompose_diagonal(gen_ueg_dpw(CellSpec::uniform_electron_gas(4, 2.0, 2)), 4);
  std::stringstream z;
  write_z_pair_csv(z, diag.two);
  EXPECT_EQ(z.str().substr(0, 10), "p,r,value\n");
  EXPECT_EQ(read_z_pair_csv(z, 3), diag.two);
}

TEST(CoefficientCsv, CanonicalKeyOrder) {
  const auto lcu = decompose(gen_random_dense(4, 2), 2);
  std::stringstream two;
  write_two_body_csv(two, lcu.two);
  std::string line;
  std::getline(two, line);
  std::array<unsigned, 4> prev{};
  bool first = true;
  while (std::getline(two, line)) {
    std::array<unsigned, 4> k{};
    char c;
    std::istringstream f(line);
    f >> k[0] >> c >> k[1] >> c >> k[2] >> c >> k[3];
    if (!first) EXPECT_LT(prev, k);
    prev = k;
    first = false;
  }
}

TEST(CoefficientCsv, MalformedInput) {
  std::istringstream bad_index("p,q,value\n0,1,0.5\n0,x,1.0\n");
  try {
    read_one_body_csv(bad_index, 1);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream out_of_range("2,0,1.0\n");
  EXPECT_THROW(read_one_body_csv(out_of_range, 1), ParseError);
  std::istringstream bad_value("0,1,abc\n");
  EXPECT_THROW(read_one_body_csv(bad_value, 1), ParseError);
  std::istringstream short_row("0,1,1,0.5\n");
  EXPECT_THROW(read_two_body_csv(short_row, 1), ParseError);
}

TEST(Report, SummaryIsKeyedText) {
  const auto s = one_norm(decompose(gen_random_dense(4, 1), 2));
  std::stringstream out;
  write_summary_report(out, s);
  const auto kv = parse_keyed_text(out);
  EXPECT_EQ(kv.at("nnz_two_unique"), std::to_string(s.nnz_two_unique));
  EXPECT_EQ(std::stod(kv.at("lambda_total")), s.lambda_total);
  EXPECT_EQ(std::stod(kv.at("identity_shift")), s.identity_shift);
}

TEST(Report, EstimateRowsAndCsv) {
  const auto sparse = assemble_general(decompose(gen_random_dense(4, 1), 3));
  const auto e =
      estimate(sparse, CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_t));
  std::stringstream out;
  write_estimate_report(out, e);
  const auto kv = parse_keyed_text(out);
  EXPECT_EQ(kv.at("total_toffolis"), std::to_string(e.total_toffolis));
  EXPECT_EQ(kv.at("logical_qubits"), std::to_string(e.logical_qubits));
  EXPECT_EQ(kv.at("row.select.toffolis"), std::to_string(e.rows[5].toffolis));
  EXPECT_EQ(kv.at("physical_qubits"), "n/a");
  EXPECT_EQ(kv.at("mode"), "min-t");
  for (const auto& r : e.rows) {
    EXPECT_EQ(kv.at("row." + slug(r.label) + ".toffolis"), std::to_string(r.toffolis));
    EXPECT_EQ(kv.at("row." + slug(r.label) + ".qubits"), std::to_string(r.qubits));
  }
  const auto header = estimate_csv_header();
  const auto row = estimate_csv_row(e);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','),
            std::count(row.begin(), row.end(), ','));
  EXPECT_EQ(row.substr(0, 8), "general,");
}

TEST(Report, Slug) {
  EXPECT_EQ(slug("PREP equal superposition over i != j"), "prep_equal_superposition_over_i_j");
  EXPECT_EQ(slug("SELECT"), "select");
}

}  // namespace
}  // namespace fqlcu
