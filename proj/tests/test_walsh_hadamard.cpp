// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fqlcu/bits.hpp"
#include "fqlcu/walsh_hadamard.hpp"
#include "test_support.hpp"

namespace fqlcu {
namespace {

TEST(WalshHadamard, MatchesDenseHadamardProduct) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {1u, 2u, 4u, 8u, 32u}) {
    std::vector<double> x(n);
    for (double& v : x) v = u(rng);
    std::vector<double> expect(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) expect[i] += testing::hadamard_sign(i, j) * x[j];
    fwht(x);
    EXPECT_LE(testing::max_abs_diff(x, expect), 1e-13) << "n=" << n;
  }
}

TEST(WalshHadamard, TwiceIsScaledIdentity) {
  std::vector<double> x = {1.0, -2.0, 0.5, 3.0, 0.0, 7.0, -1.0, 2.5};
  const auto orig = x;
  fwht(x);
  fwht(x);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_DOUBLE_EQ(x[i], 8.0 * orig[i]);
}

TEST(WalshHadamard, RejectsNonPowerOfTwo) {
  std::vector<double> x(6, 1.0);
  EXPECT_THROW(fwht(x), std::invalid_argument);
}

TEST(WalshHadamard, RowsTransformIndependently) {
  std::vector<double> x = {1, 0, 0, 0, 0, 1, 0, 0};
  fwht_rows(x, 4);
  const std::vector<double> expect = {1, 1, 1, 1, 1, -1, 1, -1};
  EXPECT_EQ(x, expect);
}

TEST(Bits, Helpers) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(7), 3);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
  EXPECT_EQ(largest_power_of_two_factor(12), 4u);
  EXPECT_EQ(largest_power_of_two_factor(14), 2u);
  EXPECT_EQ(largest_power_of_two_factor(7), 1u);
  EXPECT_EQ(exact_log2(512), 9);
  EXPECT_THROW(exact_log2(12), std::invalid_argument);
}

}  // namespace
}  // namespace fqlcu
