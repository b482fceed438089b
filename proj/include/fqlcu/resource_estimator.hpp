// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqlcu/sparse_lcu.hpp"

namespace fqlcu {

enum class QroamMode { min_t, min_qu };
enum class BudgetScheme { molecular, dpw };

struct ErrorBudget {
  double qpe = 0.0;
  double trunc = 0.0;
  double prep = 0.0;
};

/// molecular: 10/16, 3/16, 3/16; dpw: 15.8/16, 0, 0.2/16 of eps_tot, with the
/// phase-estimation share adjusted in the last place so that
/// (qpe + trunc) + prep == eps_tot exactly. Throws std::invalid_argument
/// unless eps_tot > 0 and finite.
ErrorBudget split_error_budget(double eps_tot, BudgetScheme scheme);

struct GateCost {
  std::int64_t toffolis = 0;
  std::int64_t qubits = 0;
  friend bool operator==(const GateCost&, const GateCost&) = default;
};

/// Uniform superposition over L indices with amplitude amplification. Powers
/// of two need only Hadamards: (0, ceil(log2 L)). Otherwise
/// 3 ceil(log2 L) - 3 eta_L + 2 b_L - 9 Toffolis (at least 0) on b_L + 2
/// qubits, eta_L the largest power of two dividing L.
GateCost equal_superposition_cost(std::uint64_t l, int b_l = 8);

/// Superposition over electron pairs i != j:
/// 8 ceil(log2 N) - 4 eta_N + 2 b_N - 7 Toffolis on b_N + 2 qubits. When the
/// expression is negative the cost is max(0, 3 ceil(log2 N) - eta_N).
GateCost pair_superposition_cost(int electrons, int b_n = 8);

/// Rotation angle in [0, 2 pi) with cos(beta/2) = -1/2 / sqrt(N(N-1) / 4^ceil(log2 N)).
double beta_angle(int electrons);
/// cos(alpha) = sqrt(N(N-1) / 4^ceil(log2 N)) cos(beta/2).
double amplification_overlap(int electrons, double beta);

/// QROAM lookup of L items of m bits with kappa-fold parallel outputs:
/// ceil(L/kappa) + m(kappa - 1) Toffolis on m kappa + ceil(log2 ceil(L/kappa)) qubits.
GateCost qroam_cost(std::uint64_t l, std::int64_t m, std::uint64_t kappa);
/// Measurement-based uncompute: ceil(L/kappa) + kappa Toffolis.
std::int64_t qroam_uncompute_cost(std::uint64_t l, std::uint64_t kappa);

struct KappaChoice {
  std::uint64_t kappa1 = 1;
  std::uint64_t kappa2 = 1;
};

/// Exhaustive search over kappa in {1, 2, 4, ..., 2^ceil(log2 L)}, ties to
/// the smaller kappa. min_qu fixes kappa1 = 1; kappa2 is always optimized.
KappaChoice optimize_kappa(std::uint64_t l, std::int64_t m, QroamMode mode);

/// general: 2(N - 1 + 2NM + 1); diagonal: 2N + 3NM. Throws for N < 2 or M < 1.
std::int64_t select_cost(int electrons, int index_bits, LcuKind kind);

/// aleph + ceil((m - aleph - 2) / 2). Throws std::invalid_argument if m <= aleph + 2.
std::int64_t alias_sampling_cost(std::int64_t m, int aleph);

/// Smallest aleph >= 1 with lambda 2^-aleph <= eps_prep.
int choose_aleph(double lambda, double eps_prep);

/// Output width of the QROAM: aleph + 2(4M + 1) general, aleph + 2(3M + 1) diagonal.
std::int64_t qroam_output_bits(int aleph, int index_bits, LcuKind kind);

/// ceil(pi lambda / (2 eps_qpe)).
std::int64_t qpe_repetitions(double lambda, double eps_qpe);

struct CostParams {
  int b_l = 8;
  int b_n = 8;
  std::optional<int> aleph;
  std::optional<std::uint64_t> kappa1;
  std::optional<std::uint64_t> kappa2;
  double eps_qpe = 0.0;
  double eps_trunc = 0.0;
  double eps_prep = 0.0;
  QroamMode mode = QroamMode::min_t;
  /// Reserved: physical qubits per logical qubit, reported when set.
  std::optional<double> physical_qubit_multiplier;

  static CostParams from_budget(double eps_tot, BudgetScheme scheme, QroamMode mode);
};

struct CostRow {
  std::string label;
  std::int64_t toffolis = 0;
  std::int64_t qubits = 0;
};

struct ResourceEstimate {
  LcuKind kind = LcuKind::general;
  int electrons = 0;
  int index_bits = 0;
  double lambda = 0.0;
  std::uint64_t l = 0;
  std::int64_t m = 0;
  int aleph = 0;
  std::uint64_t kappa1 = 1;
  std::uint64_t kappa2 = 1;
  double eps_qpe = 0.0;
  double eps_trunc = 0.0;
  double eps_prep = 0.0;
  QroamMode mode = QroamMode::min_t;
  /// Walk-operator rows followed by the three per-step phase-estimation rows.
  std::vector<CostRow> rows;
  std::int64_t repetitions = 0;
  /// Sum of the walk-operator rows.
  std::int64_t walk_toffolis = 0;
  /// walk_toffolis + 2 (unary iteration and controlled reflection).
  std::int64_t step_toffolis = 0;
  std::int64_t total_toffolis = 0;
  std::int64_t logical_qubits = 0;
  std::optional<double> physical_qubits;
};

/// Full cost of qubitized phase estimation for the block encoding s.
/// Throws ZeroNormError when lambda = 0, std::invalid_argument for
/// eps_qpe <= 0 or an invalid parameter, std::overflow_error on overflow.
ResourceEstimate estimate(const SparseLcu& s, const CostParams& params);

std::string to_string(QroamMode mode);
std::string to_string(BudgetScheme scheme);
std::string to_string(LcuKind kind);

}  // namespace fqlcu
