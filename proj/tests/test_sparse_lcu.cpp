// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/sources.hpp"
#include "fqlcu/sparse_lcu.hpp"
#include "fqlcu/verifier.hpp"
#include "test_support.hpp"

namespace fqlcu {
namespace {

CanonicalLcu empty_general(int bits, int n) {
  CanonicalLcu lcu;
  lcu.index_bits = bits;
  lcu.electrons = n;
  lcu.one = OneBodyCoefficients(bits);
  lcu.two = TwoBodyCoefficients(bits);
  return lcu;
}

DiagonalLcu empty_diagonal(int bits, int n) {
  DiagonalLcu lcu;
  lcu.index_bits = bits;
  lcu.electrons = n;
  lcu.one = OneBodyCoefficients(bits);
  lcu.two = ZPairCoefficients(bits);
  return lcu;
}

TEST(AssembleGeneral, WorkedExamples) {
  auto a = empty_general(1, 3);
  a.one = OneBodyCoefficients::from_keys(1, {{{1, 0}, 2.0}});
  const auto sa = assemble_general(a);
  ASSERT_EQ(sa.size(), 1u);
  EXPECT_EQ(sa.entries()[0].coefficient, 1.0);
  EXPECT_EQ(sa.unpack(sa.entries()[0].index), (std::array<std::uint32_t, 4>{1, 0, 0, 0}));
  EXPECT_EQ(sa.block_lambda(), 6.0);

  auto b = empty_general(1, 2);
  b.two = TwoBodyCoefficients::from_keys(1, {{{1, 1, 1, 1}, 1.0}});
  const auto sb = assemble_general(b);
  ASSERT_EQ(sb.size(), 1u);
  EXPECT_EQ(sb.entries()[0].coefficient, 0.5);
  EXPECT_EQ(sb.block_lambda(), 1.0);

  const auto se = assemble_general(empty_general(2, 2));
  EXPECT_TRUE(se.empty());
  EXPECT_EQ(se.sum_abs(), 0.0);
}

TEST(AssembleGeneral, BranchesAreExclusive) {
  const auto lcu = decompose(gen_random_dense(4, 3), 3);
  const auto s = assemble_general(lcu);
  EXPECT_EQ(s.size(), lcu.one.size() + lcu.two.size());
  std::set<std::uint64_t> seen;
  for (const auto& e : s.entries()) {
    EXPECT_TRUE(seen.insert(e.index).second);
    const auto k = s.unpack(e.index);
    const bool one_body = k[2] == 0 && k[3] == 0;
    if (one_body) {
      EXPECT_EQ(e.coefficient, lcu.one.value({k[0], k[1]}) / 2.0);
    } else if (k[0] == k[2] && k[1] == k[3]) {
      EXPECT_EQ(e.coefficient, lcu.two.value({k[0], k[1], k[2], k[3]}) / 2.0);
    } else {
      EXPECT_EQ(e.coefficient, lcu.two.value({k[0], k[1], k[2], k[3]}));
    }
  }
}

TEST(AssembleDiagonal, WorkedExamples) {
  auto a = empty_diagonal(1, 2);
  a.two = ZPairCoefficients::from_keys(1, {{{1, 1}, 0.5}});
  const auto sa = assemble_diagonal(a);
  ASSERT_EQ(sa.size(), 1u);
  EXPECT_EQ(sa.entries()[0].coefficient, 0.25);
  EXPECT_EQ(sa.block_lambda(), 0.5);
  EXPECT_EQ(sa.unpack(sa.entries()[0].index), (std::array<std::uint32_t, 4>{0, 1, 1, 0}));

  auto b = empty_diagonal(1, 5);
  b.one = OneBodyCoefficients::from_keys(1, {{{0, 1}, 1.0}});
  const auto sb = assemble_diagonal(b);
  ASSERT_EQ(sb.size(), 1u);
  EXPECT_EQ(sb.entries()[0].coefficient, 0.25);
  EXPECT_EQ(sb.block_lambda(), 5.0);

  EXPECT_TRUE(assemble_diagonal(empty_diagonal(2, 2)).empty());
}

TEST(AssembleDiagonal, SizeMatchesCount) {
  const auto lcu = decompose_diagonal(gen_ueg_dpw(CellSpec::uniform_electron_gas(4, 2.0, 2)), 4);
  EXPECT_EQ(assemble_diagonal(lcu).size(), count_diagonal_L(lcu));
}

TEST(Assembly, LambdaIdentity) {
  for (std::size_t d : {2u, 4u, 8u}) {
    for (int n : {2, 3, 5}) {
      const auto lcu = decompose(gen_random_dense(d, 100 + d + n), n);
      const double lambda = one_norm(lcu).lambda_total;
      EXPECT_NEAR(assemble_general(lcu).block_lambda(), lambda, 1e-12 * lambda);
    }
  }
  for (int grid : {2, 4}) {
    const auto h = gen_ueg_dpw(CellSpec::uniform_electron_gas(6, 3.0, grid));
    const auto lcu = decompose_diagonal(h, 6);
    const double lambda = norm_breakdown(h, lcu).lambda_total;
    EXPECT_NEAR(assemble_diagonal(lcu).block_lambda(), lambda, 1e-12 * lambda);
  }
}

SparseLcu three_entries() {
  return SparseLcu(LcuKind::general, 2, 1,
                   {{5, 0.35},
                    {3, 0.05},
                    {9, -0.1}});
}

TEST(Truncate, WorkedExamples) {
  const auto s = three_entries();
  EXPECT_EQ(truncate(s, 0.0), s);
  const auto t = truncate(s, 0.25);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.entries()[0].index, 5u);
  EXPECT_EQ(t.entries()[1].index, 9u);
  EXPECT_TRUE(truncate(s, s.block_lambda()).empty());
  EXPECT_TRUE(truncate(s, 10.0).empty());
  EXPECT_THROW(truncate(s, -1.0), std::invalid_argument);
}

TEST(Truncate, TiesBreakByIndex) {
  const SparseLcu s(LcuKind::general, 2, 1, {{7, 0.1}, {2, -0.1}, {4, 0.1}});
  const auto t = truncate(s, 0.2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.entries()[0].index, 4u);
  EXPECT_EQ(t.entries()[1].index, 7u);
}

TEST(Truncate, MonotoneInBudget) {
  const auto s = assemble_general(decompose(gen_random_dense(4, 6), 3));
  double prev_lambda = s.block_lambda();
  std::size_t prev_l = s.size();
  for (double b = 0.0; b <= 1.2 * s.block_lambda(); b += 0.05 * s.block_lambda()) {
    const auto t = truncate(s, b);
    EXPECT_LE(t.block_lambda(), prev_lambda);
    EXPECT_LE(t.size(), prev_l);
    EXPECT_LE(s.block_lambda() - t.block_lambda(), b + 1e-12);
    prev_lambda = t.block_lambda();
    prev_l = t.size();
  }
}

TEST(Truncate, EigenvalueDisplacementWithinBudget) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto lcu = decompose(gen_random_dense(2, seed), 2);
    const auto s = assemble_general(lcu);
    const auto full = reconstruct_from_sparse(s, lcu.identity_shift());
    EXPECT_LE(max_abs_deviation(full, build_first_quantized(gen_random_dense(2, seed), 2)),
              1e-10);
    for (double b : {0.05, 0.2, 0.5, 1.0}) {
      const auto cut = reconstruct_from_sparse(truncate(s, b), lcu.identity_shift());
      EXPECT_LE(max_eigenvalue_displacement(full, cut), b + 1e-12);
    }
  }
}

TEST(SparseLcu, RejectsDuplicatesAndDropsZeros) {
  EXPECT_THROW(SparseLcu(LcuKind::general, 2, 1, {{3, 1.0}, {3, 2.0}}), std::invalid_argument);
  const SparseLcu s(LcuKind::diagonal, 2, 1, {{3, 0.0}, {1, -2.0}});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.sum_abs(), 2.0);
  EXPECT_EQ(s.block_lambda(), 4.0);
  EXPECT_THROW(SparseLcu(LcuKind::general, 1, 1, {}), std::invalid_argument);
}

TEST(SparseLcu, BinaryRoundTrip) {
  const auto general = assemble_general(decompose(gen_random_dense(4, 2), 3));
  const auto diagonal =
      assemble_diagonal(decompose_diagonal(gen_ueg_dpw(CellSpec::uniform_electron_gas(5, 2.0, 2)), 5));
  for (const auto& s : {general, diagonal}) {
    std::stringstream buf;
    write_binary(buf, s);
    EXPECT_EQ(buf.str().size(), 16 + 16 * s.size());
    EXPECT_EQ(buf.str().substr(0, 6), "FQLCU1");
    EXPECT_EQ(read_binary(buf), s);
  }
  testing::TempDir dir("binary");
  save_binary(dir.path() / "a.bin", general);
  EXPECT_EQ(load_binary(dir.path() / "a.bin"), general);

  std::stringstream bad("NOTMAGIC00000000");
  EXPECT_THROW(read_binary(bad), std::runtime_error);
  std::stringstream buf;
  write_binary(buf, general);
  std::string truncated = buf.str();
  truncated.pop_back();
  std::stringstream cut(truncated);
  EXPECT_THROW(read_binary(cut), std::runtime_error);
}

}  // namespace
}  // namespace fqlcu
