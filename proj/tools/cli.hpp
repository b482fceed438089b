// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fqlcu/resource_estimator.hpp"

namespace fqlcu::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kZeroNorm = 3,
  kGuard = 4,
  kCheckFailed = 5,
};

enum class ScanSystem { random_dense, ueg, material };

struct ScanConfig {
  ScanSystem system = ScanSystem::random_dense;
  /// Basis sizes (random) or grid sides (ueg, material).
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{1};
  int electrons = 4;
  double wigner_seitz_radius = 5.0;
  double volume = 0.0;
  std::vector<PointCharge> charges;
  std::optional<double> eps_tot;
  BudgetScheme scheme = BudgetScheme::molecular;
  QroamMode mode = QroamMode::min_t;
  double zero_cutoff = 1e-10;
};

/// One scan point. NaN marks a column that does not apply.
struct ScanRow {
  std::size_t dim = 0;
  std::optional<std::uint64_t> seed;
  double lambda_1 = 0.0;
  double lambda_2 = 0.0;
  double lambda_T = 0.0;
  double lambda_U = 0.0;
  double lambda_V = 0.0;
  double l = 0.0;
  double nnz = 0.0;
  double toffoli = 0.0;
  double qubits = 0.0;
};

struct ScanFit {
  std::string column;
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Rows in (size, seed) order; points run on the FQLCU_THREADS worker pool.
std::vector<ScanRow> run_scan(const ScanConfig& config);
/// Power-law fits of every applicable column against D over the final three
/// D values, averaging over seeds. Empty when fewer than two D values exist.
std::vector<ScanFit> fit_scan(const std::vector<ScanRow>& rows);
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows,
                    const std::vector<ScanFit>& fits);

/// Parses "Z,x,y,z" into a point charge; throws std::invalid_argument.
PointCharge parse_charge(const std::string& text);

/// Entry point for the fqlcu command: data on out, diagnostics on err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fqlcu::cli
