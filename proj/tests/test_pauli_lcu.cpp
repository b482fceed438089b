// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/sources.hpp"
#include "fqlcu/verifier.hpp"
#include "test_support.hpp"

namespace fqlcu {
namespace {

RealMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  RealMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(DecomposeOneBody, WorkedExamples) {
  const auto id = decompose_one_body(from_rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(id, OneBodyCoefficients::from_keys(1, {{{0, 0}, 1.0}}));
  const auto z = decompose_one_body(from_rows({{1, 0}, {0, -1}}));
  EXPECT_EQ(z, OneBodyCoefficients::from_keys(1, {{{0, 1}, 1.0}}));
  const auto x = decompose_one_body(from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(x, OneBodyCoefficients::from_keys(1, {{{1, 0}, 1.0}}));
}

TEST(DecomposeOneBody, MatchesTraceOracle) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (std::size_t d : {2u, 4u, 8u}) {
      const auto h1 = testing::random_symmetric(d, seed);
      const auto w = decompose_one_body(h1, 0.0);
      for (std::uint32_t p = 0; p < d; ++p)
        for (std::uint32_t q = 0; q < d; ++q)
          EXPECT_NEAR(w.value({p, q}), testing::trace_one_body(h1, p, q), 1e-12);
    }
  }
}

TEST(DecomposeOneBody, CutoffDropsSmallEntries) {
  RealMatrix h(2);
  h(0, 0) = 1.0 + 1e-11;
  h(1, 1) = 1.0 - 1e-11;
  const auto w = decompose_one_body(h);
  EXPECT_EQ(w.size(), 1u);
  EXPECT_TRUE(w.contains({0, 0}));
}

TEST(DecomposeTwoBody, WorkedExamples) {
  EXPECT_TRUE(decompose_two_body(RealTensor4(2)).empty());
  RealTensor4 t(2);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t r = 0; r < 2; ++r) t(p, p, r, r) = 1.0;
  EXPECT_EQ(decompose_two_body(t), TwoBodyCoefficients::from_keys(1, {{{0, 0, 0, 0}, 1.0}}));
}

void expect_matches_naive(const RealTensor4& h2) {
  const std::size_t d = h2.dim();
  const auto w = decompose_two_body(h2, 0.0);
  for (std::uint32_t g = 0; g < d; ++g)
    for (std::uint32_t u = 0; u < d; ++u)
      for (std::uint32_t f = 0; f < d; ++f)
        for (std::uint32_t v = 0; v < d; ++v)
          ASSERT_NEAR(w.value({g, u, f, v}), testing::naive_two_body(h2, g, u, f, v), 1e-12);
}

TEST(DecomposeTwoBody, BruteForceEquivalence) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t d : {2u, 4u}) {
      expect_matches_naive(gen_random_dense(d, seed).two_body());
      expect_matches_naive(testing::random_tensor(d, seed));
    }
  }
}

TEST(DecomposeTwoBody, ExactTwoFoldSymmetry) {
  for (std::size_t d : {2u, 4u, 8u}) {
    const auto w = decompose_two_body(gen_random_dense(d, 17).two_body(), 0.0);
    for (const auto& [key, value] : w) {
      const auto k = w.unpack(key);
      EXPECT_EQ(value, w.value({k[2], k[3], k[0], k[1]}));
    }
  }
}

TEST(Inverse, TrivialCases) {
  EXPECT_EQ(inverse_one_body(OneBodyCoefficients(2)), RealMatrix(4));
  const auto id = inverse_one_body(OneBodyCoefficients::from_keys(2, {{{0, 0}, 1.0}}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(id(i, j), i == j ? 1.0 : 0.0);
}

TEST(Inverse, RoundTrips) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto h1 = testing::random_symmetric(8, seed);
    EXPECT_LE(testing::max_abs_diff(inverse_one_body(decompose_one_body(h1, 0.0)).data(),
                                    h1.data()),
              1e-12);
    for (std::size_t d : {2u, 4u, 8u}) {
      const auto h2 = testing::random_tensor(d, seed);
      EXPECT_LE(testing::max_abs_diff(inverse_two_body(decompose_two_body(h2, 0.0)).data(),
                                      h2.data()),
                1e-12);
    }
  }
}

TEST(Canonicalize, WorkedExamples) {
  const auto a = canonicalize(OneBodyCoefficients::from_keys(1, {{{0, 0}, 3.0}}),
                              TwoBodyCoefficients(1), 2);
  EXPECT_TRUE(a.one.empty());
  EXPECT_EQ(a.identity_one, 3.0);
  EXPECT_EQ(a.identity_two, 0.0);

  const auto one = OneBodyCoefficients::from_keys(1, {{{1, 0}, 2.0}});
  const auto sym = canonicalize(
      one, TwoBodyCoefficients::from_keys(1, {{{1, 0, 0, 0}, 0.5}, {{0, 0, 1, 0}, 0.5}}), 3);
  EXPECT_TRUE(sym.two_fold_symmetric);
  EXPECT_EQ(sym.one.value({1, 0}), 3.0);
  EXPECT_TRUE(sym.two.empty());

  const auto asym = canonicalize(one, TwoBodyCoefficients::from_keys(1, {{{1, 0, 0, 0}, 0.5}}), 3);
  EXPECT_FALSE(asym.two_fold_symmetric);
  EXPECT_EQ(asym.one.value({1, 0}), 2.5);

  EXPECT_THROW(canonicalize(one, TwoBodyCoefficients(1), 1), std::invalid_argument);
}

TEST(Canonicalize, Invariants) {
  for (std::size_t d : {2u, 4u, 8u}) {
    const auto lcu = decompose(gen_random_dense(d, 4), 3);
    EXPECT_TRUE(lcu.two_fold_symmetric);
    EXPECT_FALSE(lcu.one.contains({0, 0}));
    for (const auto& [key, value] : lcu.one) EXPECT_GT(std::fabs(value), lcu.zero_cutoff);
    for (const auto& [key, value] : lcu.two) {
      const auto k = lcu.two.unpack(key);
      EXPECT_FALSE(k[0] == 0 && k[1] == 0);
      EXPECT_FALSE(k[2] == 0 && k[3] == 0);
      EXPECT_TRUE(std::pair(k[0], k[1]) <= std::pair(k[2], k[3]));
      EXPECT_GT(std::fabs(value), lcu.zero_cutoff);
    }
  }
}

TEST(Canonicalize, AsymmetricTensorStoresPairAverage) {
  const std::size_t d = 4;
  const auto h2 = testing::random_tensor(d, 8);
  const auto raw = decompose_two_body(h2, 0.0);
  const auto lcu = canonicalize(OneBodyCoefficients(2), raw, 2, 0.0);
  EXPECT_FALSE(lcu.two_fold_symmetric);
  for (std::uint32_t p = 0; p < d; ++p)
    for (std::uint32_t q = 0; q < d; ++q)
      for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t s = 0; s < d; ++s) {
          if ((p == 0 && q == 0) || (r == 0 && s == 0)) continue;
          if (std::pair(p, q) > std::pair(r, s)) continue;
          const double expect = 0.5 * (testing::naive_two_body(h2, p, q, r, s) +
                                       testing::naive_two_body(h2, r, s, p, q));
          EXPECT_NEAR(lcu.two.value({p, q, r, s}), expect, 1e-12);
        }
  for (std::uint32_t p = 0; p < d; ++p)
    for (std::uint32_t q = 0; q < d; ++q) {
      if (p == 0 && q == 0) continue;
      const double expect = 0.5 * (testing::naive_two_body(h2, p, q, 0, 0) +
                                   testing::naive_two_body(h2, 0, 0, p, q));
      EXPECT_NEAR(lcu.one.value({p, q}), expect, 1e-12);
    }
}

TEST(OneNorm, WorkedExamples) {
  CanonicalLcu a;
  a.index_bits = 1;
  a.electrons = 3;
  a.one = OneBodyCoefficients::from_keys(1, {{{1, 1}, 0.5}});
  a.two = TwoBodyCoefficients(1);
  EXPECT_EQ(one_norm(a).lambda_total, 1.5);

  CanonicalLcu b;
  b.index_bits = 1;
  b.electrons = 2;
  b.one = OneBodyCoefficients(1);
  b.two = TwoBodyCoefficients::from_keys(1, {{{0, 1, 1, 0}, 1.0}});
  const auto s = one_norm(b);
  EXPECT_EQ(s.lambda_two, 2.0);
  EXPECT_EQ(s.lambda_total, s.lambda_one + s.lambda_two);
}

// Full-index sum over naive coefficients, independent of canonical storage.
TEST(OneNorm, MatchesFullIndexSum) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const std::size_t d = 4;
    const int n = 3;
    const auto h = gen_random_dense(d, seed);
    const auto s = one_norm(decompose(h, n, 0.0));
    double l1 = 0.0;
    double l2 = 0.0;
    for (std::uint32_t p = 0; p < d; ++p)
      for (std::uint32_t q = 0; q < d; ++q) {
        if (p == 0 && q == 0) continue;
        l1 += std::fabs(testing::trace_one_body(h.one_body(), p, q) +
                        (n - 1) * testing::naive_two_body(h.two_body(), p, q, 0, 0));
        for (std::uint32_t r = 0; r < d; ++r)
          for (std::uint32_t t = 0; t < d; ++t) {
            if (r == 0 && t == 0) continue;
            l2 += std::fabs(testing::naive_two_body(h.two_body(), p, q, r, t));
          }
      }
    l1 *= n;
    l2 *= 0.5 * n * (n - 1);
    EXPECT_NEAR(s.lambda_one, l1, 1e-12 * l1);
    EXPECT_NEAR(s.lambda_two, l2, 1e-12 * l2);
  }
}

TEST(Sparsity, SymmetricInputsRespectBounds) {
  EXPECT_EQ(max_unique_two_body(4), 45u);
  for (std::size_t d : {2u, 4u, 8u}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto s = one_norm(decompose(gen_random_dense(d, seed), 4));
      EXPECT_LE(s.nnz_one, max_unique_one_body(d));
      EXPECT_LE(s.nnz_two_unique, max_unique_two_body(d));
    }
  }
}

TEST(Hermiticity, ReconstructionIsHermitian) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto lcu = decompose(gen_random_dense(4, seed), 2);
    EXPECT_LE(hermiticity_defect(reconstruct_from_lcu(lcu)), 1e-12);
  }
}

TEST(Canonicalize, SpectrumMatchesDirectMatrix) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto h = gen_random_dense(2, seed);
    const auto direct = build_first_quantized(h, 2);
    const auto rebuilt = reconstruct_from_lcu(decompose(h, 2));
    EXPECT_LE(max_eigenvalue_displacement(direct, rebuilt), 1e-10);
  }
}

}  // namespace
}  // namespace fqlcu
