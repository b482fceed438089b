// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/resource_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fqlcu/bits.hpp"
#include "fqlcu/errors.hpp"

namespace fqlcu {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Toffoli count overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Toffoli count overflow");
  return r;
}

std::int64_t to_i64(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("count exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

void check_kappa(std::uint64_t kappa) {
  if (!is_power_of_two(kappa)) {
    throw std::invalid_argument("kappa must be a power of two >= 1");
  }
}

}  // namespace

ErrorBudget split_error_budget(double eps_tot, BudgetScheme scheme) {
  if (!(eps_tot > 0.0) || !std::isfinite(eps_tot)) {
    throw std::invalid_argument("total error budget must be positive and finite");
  }
  ErrorBudget b;
  if (scheme == BudgetScheme::molecular) {
    b.trunc = eps_tot * 3.0 / 16.0;
    b.prep = eps_tot * 3.0 / 16.0;
  } else {
    b.trunc = 0.0;
    b.prep = eps_tot * 0.2 / 16.0;
  }
  const double inf = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 64; ++j) {
    b.qpe = eps_tot - b.trunc - b.prep;
    double last = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double sum = (b.qpe + b.trunc) + b.prep;
      if (sum == eps_tot) return b;
      const double dir = sum < eps_tot ? inf : -inf;
      if (i > 0 && dir != last) break;
      last = dir;
      b.qpe = std::nextafter(b.qpe, dir);
    }
    b.prep = std::nextafter(b.prep, 0.0);
  }
  throw std::logic_error("error budget split does not close");
}

GateCost equal_superposition_cost(std::uint64_t l, int b_l) {
  if (l == 0) throw std::invalid_argument("superposition over zero indices");
  const std::int64_t k = ceil_log2(l);
  if (is_power_of_two(l)) return {0, k};
  const std::int64_t eta = to_i64(largest_power_of_two_factor(l));
  const std::int64_t t = 3 * k - 3 * eta + 2 * static_cast<std::int64_t>(b_l) - 9;
  return {std::max<std::int64_t>(0, t), static_cast<std::int64_t>(b_l) + 2};
}

GateCost pair_superposition_cost(int electrons, int b_n) {
  if (electrons < 2) throw std::invalid_argument("pair superposition needs N >= 2");
  const std::int64_t k = ceil_log2(static_cast<std::uint64_t>(electrons));
  const std::int64_t eta =
      to_i64(largest_power_of_two_factor(static_cast<std::uint64_t>(electrons)));
  std::int64_t t = 8 * k - 4 * eta + 2 * static_cast<std::int64_t>(b_n) - 7;
  if (t < 0) t = std::max<std::int64_t>(0, 3 * k - eta);
  return {t, static_cast<std::int64_t>(b_n) + 2};
}

namespace {

double pair_overlap_scale(int electrons) {
  const double n = electrons;
  const double pow2 = std::ldexp(1.0, ceil_log2(static_cast<std::uint64_t>(electrons)));
  return std::sqrt(n * (n - 1.0) / (pow2 * pow2));
}

}  // namespace

double beta_angle(int electrons) {
  if (electrons < 2) throw std::invalid_argument("beta angle needs N >= 2");
  const double c = -0.5 / pair_overlap_scale(electrons);
  const double beta = 2.0 * std::acos(c);
  return beta >= 2.0 * std::numbers::pi ? beta - 2.0 * std::numbers::pi : beta;
}

double amplification_overlap(int electrons, double beta) {
  return pair_overlap_scale(electrons) * std::cos(beta / 2.0);
}

GateCost qroam_cost(std::uint64_t l, std::int64_t m, std::uint64_t kappa) {
  check_kappa(kappa);
  if (m < 1) throw std::invalid_argument("QROAM output width must be >= 1");
  const std::uint64_t blocks = ceil_div(l, kappa);
  const std::int64_t k = to_i64(kappa);
  return {checked_add(to_i64(blocks), checked_mul(m, k - 1)),
          checked_add(checked_mul(m, k), ceil_log2(blocks))};
}

std::int64_t qroam_uncompute_cost(std::uint64_t l, std::uint64_t kappa) {
  check_kappa(kappa);
  return checked_add(to_i64(ceil_div(l, kappa)), to_i64(kappa));
}

KappaChoice optimize_kappa(std::uint64_t l, std::int64_t m, QroamMode mode) {
  const int top = ceil_log2(std::max<std::uint64_t>(l, 1));
  KappaChoice best;
  std::int64_t best1 = qroam_cost(l, m, 1).toffolis;
  std::int64_t best2 = qroam_uncompute_cost(l, 1);
  for (int e = 1; e <= top; ++e) {
    const std::uint64_t kappa = std::uint64_t{1} << e;
    if (mode == QroamMode::min_t) {
      const auto c1 = qroam_cost(l, m, kappa).toffolis;
      if (c1 < best1) {
        best1 = c1;
        best.kappa1 = kappa;
      }
    }
    const auto c2 = qroam_uncompute_cost(l, kappa);
    if (c2 < best2) {
      best2 = c2;
      best.kappa2 = kappa;
    }
  }
  return best;
}

std::int64_t select_cost(int electrons, int index_bits, LcuKind kind) {
  if (electrons < 2) throw std::invalid_argument("SELECT needs N >= 2");
  if (index_bits < 1) throw std::invalid_argument("SELECT needs M >= 1");
  const std::int64_t n = electrons;
  const std::int64_t m = index_bits;
  return kind == LcuKind::general ? 2 * (n - 1 + 2 * n * m + 1) : 2 * n + 3 * n * m;
}

std::int64_t alias_sampling_cost(std::int64_t m, int aleph) {
  const std::int64_t gap = m - aleph - 2;
  if (gap <= 0) throw std::invalid_argument("alias sampling needs m > aleph + 2");
  return aleph + (gap + 1) / 2;
}

int choose_aleph(double lambda, double eps_prep) {
  if (!(eps_prep > 0.0)) throw std::invalid_argument("eps_prep must be positive");
  for (int a = 1; a <= 1024; ++a) {
    if (std::ldexp(lambda, -a) <= eps_prep) return a;
  }
  throw std::invalid_argument("no keep-probability width meets eps_prep");
}

std::int64_t qroam_output_bits(int aleph, int index_bits, LcuKind kind) {
  const std::int64_t per = kind == LcuKind::general ? 4 : 3;
  return aleph + 2 * (per * index_bits + 1);
}

std::int64_t qpe_repetitions(double lambda, double eps_qpe) {
  if (!(eps_qpe > 0.0)) throw std::invalid_argument("eps_qpe must be positive");
  const double reps = std::ceil(std::numbers::pi * lambda / (2.0 * eps_qpe));
  if (!(reps < 9.0e18)) throw std::overflow_error("QPE repetition count overflow");
  return static_cast<std::int64_t>(reps);
}

CostParams CostParams::from_budget(double eps_tot, BudgetScheme scheme, QroamMode mode) {
  const auto b = split_error_budget(eps_tot, scheme);
  CostParams p;
  p.eps_qpe = b.qpe;
  p.eps_trunc = b.trunc;
  p.eps_prep = b.prep;
  p.mode = mode;
  return p;
}

ResourceEstimate estimate(const SparseLcu& s, const CostParams& params) {
  const double lambda = s.block_lambda();
  if (s.empty() || !(lambda > 0.0)) {
    throw ZeroNormError("block encoding has zero one-norm");
  }
  if (!(params.eps_qpe > 0.0)) throw std::invalid_argument("eps_qpe must be positive");
  if (params.b_l < 1 || params.b_n < 1) {
    throw std::invalid_argument("rotation precision must be >= 1 bit");
  }
  ResourceEstimate e;
  e.kind = s.kind();
  e.electrons = s.electrons();
  e.index_bits = s.index_bits();
  e.lambda = lambda;
  e.l = s.size();
  e.eps_qpe = params.eps_qpe;
  e.eps_trunc = params.eps_trunc;
  e.eps_prep = params.eps_prep;
  e.mode = params.mode;
  e.aleph = params.aleph ? *params.aleph : choose_aleph(lambda, params.eps_prep);
  if (e.aleph < 1) throw std::invalid_argument("aleph must be >= 1");
  e.m = qroam_output_bits(e.aleph, e.index_bits, e.kind);

  const auto best = optimize_kappa(e.l, e.m, params.mode);
  e.kappa1 = params.kappa1 ? *params.kappa1 : best.kappa1;
  e.kappa2 = params.kappa2 ? *params.kappa2 : best.kappa2;
  check_kappa(e.kappa1);
  check_kappa(e.kappa2);

  const std::int64_t n = e.electrons;
  const std::int64_t m_bits = e.index_bits;
  const auto sup_l = equal_superposition_cost(e.l, params.b_l);
  const auto sup_n = pair_superposition_cost(e.electrons, params.b_n);
  const auto lookup = qroam_cost(e.l, e.m, e.kappa1);
  const std::int64_t log_l = ceil_log2(e.l);
  const std::int64_t log_n = ceil_log2(static_cast<std::uint64_t>(n));

  e.rows = {
      {"system register", 0, checked_mul(n, m_bits)},
      {"PREP equal superposition over l", sup_l.toffolis, sup_l.qubits},
      {"PREP equal superposition over i != j", sup_n.toffolis, sup_n.qubits},
      {"PREP data lookup via QROAM", lookup.toffolis, lookup.qubits},
      {"PREP coherent alias sampling", alias_sampling_cost(e.m, e.aleph), 0},
      {"SELECT", select_cost(e.electrons, e.index_bits, e.kind), 0},
      {"UNPREP coherent alias sampling", 0, 0},
      {"UNPREP data lookup via QROAM", qroam_uncompute_cost(e.l, e.kappa2), 0},
      {"UNPREP equal superpositions", checked_add(sup_l.toffolis, sup_n.toffolis), 0},
      {"reflection", log_l + 2 * log_n + 2, 0},
  };
  e.walk_toffolis = 0;
  for (const auto& r : e.rows) e.walk_toffolis = checked_add(e.walk_toffolis, r.toffolis);

  e.repetitions = qpe_repetitions(lambda, params.eps_qpe);
  const std::int64_t qpe_bits = ceil_log2(static_cast<std::uint64_t>(e.repetitions) + 1);
  e.rows.push_back({"phase estimation ancillas", 0, qpe_bits});
  e.rows.push_back({"unary iteration over walk operator", 1, qpe_bits - 1});
  e.rows.push_back({"make reflection controlled", 1, 0});

  e.step_toffolis = checked_add(e.walk_toffolis, 2);
  e.total_toffolis = checked_mul(e.step_toffolis, e.repetitions);
  e.logical_qubits = 0;
  for (const auto& r : e.rows) e.logical_qubits = checked_add(e.logical_qubits, r.qubits);
  if (params.physical_qubit_multiplier) {
    e.physical_qubits = *params.physical_qubit_multiplier * static_cast<double>(e.logical_qubits);
  }
  return e;
}

std::string to_string(QroamMode mode) { return mode == QroamMode::min_t ? "min-t" : "min-qu"; }
std::string to_string(BudgetScheme scheme) {
  return scheme == BudgetScheme::molecular ? "molecular" : "dpw";
}
std::string to_string(LcuKind kind) { return kind == LcuKind::general ? "general" : "diagonal"; }

}  // namespace fqlcu
