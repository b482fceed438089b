// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/errors.hpp"
#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/resource_estimator.hpp"
#include "fqlcu/sources.hpp"
#include "fqlcu/sparse_lcu.hpp"

namespace fqlcu {
namespace {

TEST(ErrorBudget, Splits) {
  const auto m = split_error_budget(1.6e-3, BudgetScheme::molecular);
  EXPECT_NEAR(m.qpe, 1.0e-3, 1e-18);
  EXPECT_NEAR(m.trunc, 3.0e-4, 1e-18);
  EXPECT_NEAR(m.prep, 3.0e-4, 1e-18);
  const auto d = split_error_budget(1.6e-3, BudgetScheme::dpw);
  EXPECT_NEAR(d.qpe, 1.58e-3, 1e-18);
  EXPECT_EQ(d.trunc, 0.0);
  EXPECT_NEAR(d.prep, 2.0e-5, 1e-18);
  for (double eps : {1.6e-3, 1e-2, 0.3, 7.0, 1e-7}) {
    for (auto scheme : {BudgetScheme::molecular, BudgetScheme::dpw}) {
      const auto b = split_error_budget(eps, scheme);
      EXPECT_EQ(b.qpe + b.trunc + b.prep, eps);
    }
  }
  EXPECT_THROW(split_error_budget(0.0, BudgetScheme::dpw), std::invalid_argument);
  EXPECT_THROW(split_error_budget(-1.0, BudgetScheme::dpw), std::invalid_argument);
}

TEST(Superposition, EqualOverL) {
  EXPECT_EQ(equal_superposition_cost(7, 8), (GateCost{13, 10}));
  EXPECT_EQ(equal_superposition_cost(8, 8), (GateCost{0, 3}));
  EXPECT_EQ(equal_superposition_cost(12, 8).toffolis, 7);
  EXPECT_EQ(equal_superposition_cost(1, 8).toffolis, 0);
  EXPECT_THROW(equal_superposition_cost(0, 8), std::invalid_argument);
}

TEST(Superposition, Pairs) {
  EXPECT_EQ(pair_superposition_cost(14, 8).toffolis, 33);
  EXPECT_EQ(pair_superposition_cost(14, 8).qubits, 10);
  EXPECT_EQ(pair_superposition_cost(16, 8).toffolis, 0);
  EXPECT_EQ(pair_superposition_cost(3, 8).toffolis, 8 * 2 - 4 + 16 - 7);
  EXPECT_THROW(pair_superposition_cost(1, 8), std::invalid_argument);
}

TEST(BetaAngle, WorkedExamples) {
  const double b3 = beta_angle(3);
  EXPECT_NEAR(std::cos(b3 / 2), -0.5 / std::sqrt(6.0 / 16.0), 1e-12);
  EXPECT_NEAR(b3, 5.0522, 1e-4);
  EXPECT_NEAR(std::cos(3 * std::acos(amplification_overlap(3, b3))), 1.0, 1e-12);
  EXPECT_NEAR(beta_angle(2), 3 * std::numbers::pi / 2, 1e-12);
  for (int n = 2; n <= 40; ++n) {
    EXPECT_NEAR(std::cos(3 * std::acos(amplification_overlap(n, beta_angle(n)))), 1.0, 1e-12)
        << n;
  }
}

TEST(Qroam, Costs) {
  EXPECT_EQ(qroam_cost(1000, 100, 4).toffolis, 550);
  EXPECT_EQ(qroam_cost(1000, 100, 4).qubits, 400 + 8);
  EXPECT_EQ(qroam_cost(1000, 100, 1).toffolis, 1000);
  EXPECT_EQ(qroam_uncompute_cost(1000, 32), 64);
  EXPECT_THROW(qroam_cost(1000, 100, 3), std::invalid_argument);
  EXPECT_THROW(qroam_uncompute_cost(1000, 0), std::invalid_argument);
}

TEST(Qroam, KappaSearch) {
  const auto t = optimize_kappa(1000, 100, QroamMode::min_t);
  EXPECT_EQ(t.kappa1, 4u);
  EXPECT_EQ(t.kappa2, 32u);
  const auto q = optimize_kappa(1000, 100, QroamMode::min_qu);
  EXPECT_EQ(q.kappa1, 1u);
  EXPECT_EQ(q.kappa2, 32u);
  // Exhaustive oracle over powers of two, ties to the smaller kappa.
  for (std::uint64_t l : {1u, 2u, 7u, 100u, 1146u, 5000u}) {
    for (std::int64_t m : {10, 57, 200}) {
      std::uint64_t best = 1;
      for (std::uint64_t k = 2; k <= 8192; k *= 2)
        if (qroam_cost(l, m, k).toffolis < qroam_cost(l, m, best).toffolis) best = k;
      EXPECT_EQ(optimize_kappa(l, m, QroamMode::min_t).kappa1, best) << l << " " << m;
    }
  }
}

TEST(Select, Costs) {
  EXPECT_EQ(select_cost(14, 9, LcuKind::general), 532);
  EXPECT_EQ(select_cost(14, 9, LcuKind::diagonal), 406);
}

TEST(AliasSampling, Costs) {
  EXPECT_EQ(alias_sampling_cost(100, 30), 64);
  EXPECT_EQ(alias_sampling_cost(34, 30), 31);
  EXPECT_EQ(alias_sampling_cost(35, 30), 32);
  EXPECT_THROW(alias_sampling_cost(32, 30), std::invalid_argument);
  EXPECT_THROW(alias_sampling_cost(20, 30), std::invalid_argument);
}

TEST(Aleph, SmallestSufficientWidth) {
  for (double lambda : {0.5, 1.0, 91.3351, 1e4}) {
    for (double eps : {1e-3, 2e-5, 0.7}) {
      const int a = choose_aleph(lambda, eps);
      EXPECT_GE(a, 1);
      EXPECT_LE(lambda * std::pow(2.0, -a), eps);
      if (a > 1) EXPECT_GT(lambda * std::pow(2.0, -(a - 1)), eps);
    }
  }
  EXPECT_EQ(choose_aleph(91.3351, 2e-5), 23);
  EXPECT_THROW(choose_aleph(1.0, 0.0), std::invalid_argument);
}

TEST(Qpe, Repetitions) {
  EXPECT_EQ(qpe_repetitions(100.0, 1e-3), 157080);
  EXPECT_THROW(qpe_repetitions(100.0, 0.0), std::invalid_argument);
}

SparseLcu sample_lcu(double scale = 1.0) {
  auto s = assemble_general(decompose(gen_random_dense(8, 5), 4));
  std::vector<LcuEntry> e = s.entries();
  for (auto& x : e) x.coefficient *= scale;
  return SparseLcu(LcuKind::general, 4, 3, std::move(e));
}

TEST(Estimate, RowInvariants) {
  const auto diag = assemble_diagonal(
      decompose_diagonal(gen_ueg_dpw(CellSpec::uniform_electron_gas(6, 3.0, 4)), 6));
  for (const auto& s : {sample_lcu(), diag}) {
    for (auto mode : {QroamMode::min_t, QroamMode::min_qu}) {
      const auto e = estimate(s, CostParams::from_budget(1.6e-3, BudgetScheme::molecular, mode));
      ASSERT_EQ(e.rows.size(), 13u);
      std::int64_t walk = 0;
      std::int64_t qubits = 0;
      for (std::size_t i = 0; i < 10; ++i) walk += e.rows[i].toffolis;
      for (const auto& r : e.rows) qubits += r.qubits;
      EXPECT_EQ(e.walk_toffolis, walk);
      EXPECT_EQ(e.step_toffolis, walk + 2);
      EXPECT_EQ(e.total_toffolis, e.step_toffolis * e.repetitions);
      EXPECT_EQ(e.logical_qubits, qubits);
      EXPECT_EQ(e.rows[0].qubits, s.electrons() * s.index_bits());
      EXPECT_EQ(e.rows[8].toffolis, e.rows[1].toffolis + e.rows[2].toffolis);
      EXPECT_EQ(e.rows[6].toffolis, 0);
      EXPECT_EQ(e.lambda, s.block_lambda());
      EXPECT_EQ(e.l, s.size());
      const int per = s.kind() == LcuKind::general ? 4 : 3;
      EXPECT_EQ(e.m, e.aleph + 2 * (per * s.index_bits() + 1));
      EXPECT_EQ(e.repetitions, qpe_repetitions(e.lambda, e.eps_qpe));
      EXPECT_EQ(e.rows[10].qubits, std::ceil(std::log2(double(e.repetitions) + 1)));
      if (mode == QroamMode::min_qu) EXPECT_EQ(e.kappa1, 1u);
    }
  }
}

TEST(Estimate, Errors) {
  auto p = CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_t);
  EXPECT_THROW(estimate(SparseLcu(LcuKind::general, 2, 1, {}), p), ZeroNormError);
  p.eps_qpe = 0.0;
  EXPECT_THROW(estimate(sample_lcu(), p), std::invalid_argument);
  p = CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_t);
  p.kappa1 = 6;
  EXPECT_THROW(estimate(sample_lcu(), p), std::invalid_argument);
}

TEST(Estimate, Overrides) {
  auto p = CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_t);
  p.aleph = 12;
  p.kappa1 = 8;
  p.kappa2 = 2;
  p.physical_qubit_multiplier = 1000.0;
  const auto e = estimate(sample_lcu(), p);
  EXPECT_EQ(e.aleph, 12);
  EXPECT_EQ(e.kappa1, 8u);
  EXPECT_EQ(e.kappa2, 2u);
  ASSERT_TRUE(e.physical_qubits.has_value());
  EXPECT_EQ(*e.physical_qubits, 1000.0 * double(e.logical_qubits));
}

TEST(Estimate, Monotonicity) {
  auto p = CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_t);
  p.aleph = 20;
  p.kappa1 = 4;
  p.kappa2 = 16;
  std::int64_t prev = 0;
  for (double scale : {0.5, 1.0, 1.5, 3.0, 10.0}) {
    const auto t = estimate(sample_lcu(scale), p).total_toffolis;
    EXPECT_GE(t, prev);
    prev = t;
  }
  prev = std::numeric_limits<std::int64_t>::max();
  for (double eps : {1e-4, 1e-3, 3e-3, 1e-2}) {
    p.eps_qpe = eps;
    const auto t = estimate(sample_lcu(), p).total_toffolis;
    EXPECT_LE(t, prev);
    prev = t;
  }
}

TEST(Estimate, ModeDominance) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (std::size_t d : {4u, 8u, 16u}) {
      const auto s = assemble_general(decompose(gen_random_dense(d, seed), 3));
      const auto t =
          estimate(s, CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_t));
      const auto q =
          estimate(s, CostParams::from_budget(1.6e-3, BudgetScheme::molecular, QroamMode::min_qu));
      EXPECT_LE(q.logical_qubits, t.logical_qubits);
      EXPECT_LE(t.total_toffolis, q.total_toffolis);
    }
  }
}

TEST(Estimate, Labels) {
  EXPECT_EQ(to_string(QroamMode::min_t), "min-t");
  EXPECT_EQ(to_string(QroamMode::min_qu), "min-qu");
  EXPECT_EQ(to_string(BudgetScheme::dpw), "dpw");
  EXPECT_EQ(to_string(LcuKind::diagonal), "diagonal");
}

}  // namespace
}  // namespace fqlcu
