// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "fqlcu/bits.hpp"
#include "fqlcu/coefficient_io.hpp"
#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/errors.hpp"
#include "fqlcu/parallel.hpp"
#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/power_law.hpp"
#include "fqlcu/report.hpp"
#include "fqlcu/sources.hpp"
#include "fqlcu/sparse_lcu.hpp"
#include "fqlcu/verifier.hpp"

namespace fqlcu::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceOptions {
  bool random = false;
  std::size_t dim = 0;
  std::uint64_t seed = 1;
  std::string fcidump;
  bool ueg = false;
  bool material = false;
  int grid = 0;
  double rs = 5.0;
  double volume = 0.0;
  std::vector<std::string> charges;
  std::optional<int> electrons;
  double zero_cutoff = kDefaultZeroCutoff;
};

void add_source_options(CLI::App* sub, SourceOptions& o) {
  sub->add_flag("--random", o.random, "Random dense Hamiltonian");
  sub->add_option("--dim", o.dim, "Basis size D for --random (power of two)");
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--fcidump", o.fcidump, "FCIDUMP file");
  sub->add_flag("--ueg,--diag", o.ueg, "Uniform electron gas in dual plane waves");
  sub->add_flag("--material", o.material, "Dual plane waves with point charges");
  sub->add_option("--grid", o.grid, "Grid points per side (D = grid^3)");
  sub->add_option("--rs", o.rs, "Wigner-Seitz radius in Bohr (--ueg)");
  sub->add_option("--volume", o.volume, "Cell volume in Bohr^3 (--material)");
  sub->add_option("--charge", o.charges, "Point charge 'Z,x,y,z' in Bohr (--material, repeatable)");
  sub->add_option("--n", o.electrons, "Electron count");
  sub->add_option("--zero-cutoff", o.zero_cutoff, "Coefficient zero threshold (Hartree)");
}

struct Source {
  std::string name;
  std::optional<GeneralHamiltonian> general;
  std::optional<DiagonalHamiltonian> diagonal;
  int electrons = 0;

  std::size_t dim() const { return general ? general->dim() : diagonal->dim(); }
  int index_bits() const { return general ? general->index_bits() : diagonal->index_bits(); }
};

int selected_sources(const SourceOptions& o) {
  return int{o.random} + int{!o.fcidump.empty()} + int{o.ueg} + int{o.material};
}

int require_electrons(const SourceOptions& o) {
  if (!o.electrons) throw UsageError("--n (electron count) is required");
  if (*o.electrons < 2) throw UsageError("--n must be at least 2");
  return *o.electrons;
}

CellSpec make_cell(const SourceOptions& o, int electrons) {
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  if (o.material) {
    if (!(o.volume > 0.0)) throw UsageError("--volume must be positive");
    return CellSpec::with_volume(electrons, o.volume, o.grid);
  }
  if (!(o.rs > 0.0)) throw UsageError("--rs must be positive");
  return CellSpec::uniform_electron_gas(electrons, o.rs, o.grid);
}

/// Index width implied by the options without building the Hamiltonian.
std::optional<int> planned_index_bits(const SourceOptions& o) {
  if (o.random && o.dim > 0 && is_power_of_two(o.dim)) return exact_log2(o.dim);
  if ((o.ueg || o.material) && o.grid > 0) {
    const auto g = static_cast<std::uint64_t>(o.grid);
    if (is_power_of_two(g * g * g)) return exact_log2(g * g * g);
  }
  return std::nullopt;
}

Source load_source(const SourceOptions& o) {
  if (selected_sources(o) != 1) {
    throw UsageError("choose exactly one of --random, --fcidump, --ueg, --material");
  }
  Source s;
  if (o.random) {
    if (o.dim == 0) throw UsageError("--random needs --dim");
    if (!is_power_of_two(o.dim)) throw UsageError("--dim must be a power of two");
    s.name = "random-dense";
    s.electrons = require_electrons(o);
    s.general = gen_random_dense(o.dim, o.seed);
  } else if (!o.fcidump.empty()) {
    s.name = "fcidump";
    if (!std::filesystem::is_regular_file(o.fcidump)) {
      throw InputError("cannot read FCIDUMP file '" + o.fcidump + "'");
    }
    FcidumpData data = [&] {
      try {
        return load_fcidump(o.fcidump);
      } catch (const ParseError& e) {
        throw InputError(o.fcidump + ": " + e.what());
      } catch (const UnsupportedDimensionError& e) {
        throw InputError(o.fcidump + ": " + e.what());
      } catch (const std::runtime_error& e) {
        throw InputError(e.what());
      }
    }();
    if (o.electrons) {
      s.electrons = require_electrons(o);
    } else if (data.electrons) {
      s.electrons = *data.electrons;
      if (s.electrons < 2) throw UsageError("NELEC below 2; pass --n");
    } else {
      throw UsageError("FCIDUMP lacks NELEC; pass --n");
    }
    s.general = std::move(data.hamiltonian);
  } else {
    s.name = o.ueg ? "ueg" : "material";
    s.electrons = require_electrons(o);
    const CellSpec cell = make_cell(o, s.electrons);
    if (o.ueg) {
      s.diagonal = gen_ueg_dpw(cell);
    } else {
      std::vector<PointCharge> charges;
      for (const auto& c : o.charges) charges.push_back(parse_charge(c));
      s.diagonal = gen_material_dpw(cell, charges);
    }
  }
  return s;
}

void write_header(std::ostream& out, const Source& s) {
  out << "source = " << s.name << '\n'
      << "kind = " << (s.general ? "general" : "diagonal") << '\n'
      << "electrons = " << s.electrons << '\n'
      << "basis_size = " << s.dim() << '\n'
      << "index_bits = " << s.index_bits() << '\n';
}

void open_output(std::ofstream& f, const std::string& path) {
  f.open(path);
  if (!f) throw InputError("cannot write '" + path + "'");
}

SparseLcu sparse_for(const Source& s, double cutoff) {
  if (s.general) return assemble_general(decompose(*s.general, s.electrons, cutoff));
  return assemble_diagonal(decompose_diagonal(*s.diagonal, s.electrons, cutoff));
}

// decompose -------------------------------------------------------------

struct DecomposeOptions {
  SourceOptions source;
  std::string coeffs;
  std::string binary;
};

int cmd_decompose(const DecomposeOptions& o, std::ostream& out) {
  const Source s = load_source(o.source);
  write_header(out, s);
  SparseLcu sparse;
  if (s.general) {
    const CanonicalLcu lcu = decompose(*s.general, s.electrons, o.source.zero_cutoff);
    write_summary_report(out, one_norm(lcu));
    out << "two_fold_symmetric = " << (lcu.two_fold_symmetric ? "true" : "false") << '\n';
    sparse = assemble_general(lcu);
    if (!o.coeffs.empty()) {
      std::ofstream f1, f2;
      open_output(f1, o.coeffs + ".one.csv");
      open_output(f2, o.coeffs + ".two.csv");
      write_one_body_csv(f1, lcu.one);
      write_two_body_csv(f2, lcu.two);
    }
  } else {
    const DiagonalLcu lcu = decompose_diagonal(*s.diagonal, s.electrons, o.source.zero_cutoff);
    write_norm_report(out, norm_breakdown(*s.diagonal, lcu));
    const std::size_t l = count_diagonal_L(lcu);
    out << "nnz_one = " << lcu.one.size() << '\n'
        << "nnz_two_unique = " << l - lcu.one.size() << '\n'
        << "identity_shift = " << format_double(lcu.identity_shift()) << '\n';
    sparse = assemble_diagonal(lcu);
    if (!o.coeffs.empty()) {
      std::ofstream f1, f2;
      open_output(f1, o.coeffs + ".one.csv");
      open_output(f2, o.coeffs + ".two.csv");
      write_one_body_csv(f1, lcu.one);
      write_z_pair_csv(f2, lcu.two);
    }
  }
  out << "L = " << sparse.size() << '\n'
      << "block_lambda = " << format_double(sparse.block_lambda()) << '\n';
  if (!o.binary.empty()) {
    try {
      save_binary(o.binary, sparse);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
  }
  return kOk;
}

// estimate --------------------------------------------------------------

struct EstimateOptions {
  SourceOptions source;
  std::string lcu;
  std::optional<double> eps_tot;
  std::string mode = "min-t";
  std::string scheme;
  std::optional<double> trunc_budget;
  std::optional<int> aleph;
  std::optional<std::uint64_t> kappa1;
  std::optional<std::uint64_t> kappa2;
  int b_l = 8;
  int b_n = 8;
  std::optional<double> physical_multiplier;
};

QroamMode parse_mode(const std::string& m) {
  if (m == "min-t") return QroamMode::min_t;
  if (m == "min-qu") return QroamMode::min_qu;
  throw UsageError("--mode must be min-t or min-qu");
}

BudgetScheme parse_scheme(const std::string& s) {
  if (s == "molecular") return BudgetScheme::molecular;
  if (s == "dpw") return BudgetScheme::dpw;
  throw UsageError("--scheme must be molecular or dpw");
}

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
  if (!o.eps_tot) throw UsageError("--eps-tot is required");
  if (!(*o.eps_tot > 0.0) || !std::isfinite(*o.eps_tot)) {
    throw UsageError("--eps-tot must be positive");
  }
  const QroamMode mode = parse_mode(o.mode);
  SparseLcu sparse;
  std::string name;
  if (!o.lcu.empty()) {
    if (selected_sources(o.source) != 0) throw UsageError("--lcu excludes other sources");
    if (!std::filesystem::is_regular_file(o.lcu)) {
      throw InputError("cannot read coefficient list '" + o.lcu + "'");
    }
    try {
      sparse = load_binary(o.lcu);
    } catch (const std::runtime_error& e) {
      throw InputError(o.lcu + ": " + e.what());
    }
    name = "lcu-file";
  } else {
    const Source s = load_source(o.source);
    sparse = sparse_for(s, o.source.zero_cutoff);
    name = s.name;
  }
  const BudgetScheme scheme =
      o.scheme.empty() ? (sparse.kind() == LcuKind::general ? BudgetScheme::molecular
                                                            : BudgetScheme::dpw)
                       : parse_scheme(o.scheme);
  CostParams params = CostParams::from_budget(*o.eps_tot, scheme, mode);
  params.aleph = o.aleph;
  params.kappa1 = o.kappa1;
  params.kappa2 = o.kappa2;
  params.b_l = o.b_l;
  params.b_n = o.b_n;
  params.physical_qubit_multiplier = o.physical_multiplier;
  const double budget = o.trunc_budget ? *o.trunc_budget : params.eps_trunc;
  if (budget < 0.0) throw UsageError("--trunc-budget must be >= 0");
  const SparseLcu kept = budget > 0.0 ? truncate(sparse, budget) : sparse;

  out << "source = " << name << '\n'
      << "scheme = " << to_string(scheme) << '\n'
      << "eps_tot = " << format_double(*o.eps_tot) << '\n'
      << "trunc_budget = " << format_double(budget) << '\n'
      << "lambda_untruncated = " << format_double(sparse.block_lambda()) << '\n'
      << "L_untruncated = " << sparse.size() << '\n';
  write_estimate_report(out, estimate(kept, params));
  return kOk;
}

// verify ----------------------------------------------------------------

struct VerifyOptions {
  SourceOptions source;
  double trunc_budget = 0.0;
};

struct CheckLine {
  std::string name;
  double deviation;
  double tolerance;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.source.electrons && *o.source.electrons >= 2) {
    if (const auto m = planned_index_bits(o.source)) check_oracle_size(*o.source.electrons, *m);
  }
  const Source s = load_source(o.source);
  check_oracle_size(s.electrons, s.index_bits());
  std::vector<CheckLine> checks;
  DenseOperator direct;
  DenseOperator rebuilt;
  double shift = 0.0;
  double lambda = 0.0;
  SparseLcu sparse;
  if (s.general) {
    const CanonicalLcu lcu = decompose(*s.general, s.electrons, o.source.zero_cutoff);
    direct = build_first_quantized(*s.general, s.electrons);
    rebuilt = reconstruct_from_lcu(lcu);
    shift = lcu.identity_shift();
    lambda = one_norm(lcu).lambda_total;
    sparse = assemble_general(lcu);
  } else {
    const DiagonalLcu lcu = decompose_diagonal(*s.diagonal, s.electrons, o.source.zero_cutoff);
    direct = build_first_quantized(*s.diagonal, s.electrons);
    rebuilt = reconstruct_from_lcu(lcu);
    shift = lcu.identity_shift();
    lambda = norm_breakdown(*s.diagonal, lcu).lambda_total;
    sparse = assemble_diagonal(lcu);
  }
  checks.push_back({"reconstruct_vs_direct", max_abs_deviation(rebuilt, direct), 1e-10});
  checks.push_back({"hermiticity", hermiticity_defect(rebuilt), 1e-12});
  checks.push_back({"spectrum", max_eigenvalue_displacement(rebuilt, direct), 1e-10});
  const DenseOperator from_sparse = reconstruct_from_sparse(sparse, shift);
  checks.push_back({"block_encoding_vs_direct", max_abs_deviation(from_sparse, direct), 1e-10});
  const double rel = lambda > 0.0 ? std::fabs(sparse.block_lambda() - lambda) / lambda
                                  : std::fabs(sparse.block_lambda());
  checks.push_back({"norm_identity", rel, 1e-12});
  if (o.trunc_budget > 0.0) {
    const DenseOperator cut = reconstruct_from_sparse(truncate(sparse, o.trunc_budget), shift);
    checks.push_back({"truncation_bound", max_eigenvalue_displacement(cut, from_sparse),
                      o.trunc_budget});
  }
  bool all = true;
  for (const auto& c : checks) {
    const bool pass = c.deviation <= c.tolerance;
    all = all && pass;
    out << "check " << c.name << ' ' << (pass ? "PASS" : "FAIL")
        << " deviation=" << format_double(c.deviation)
        << " tolerance=" << format_double(c.tolerance) << '\n';
  }
  out << "result " << (all ? "PASS" : "FAIL") << '\n';
  return all ? kOk : kCheckFailed;
}

// scan ------------------------------------------------------------------

struct ScanOptions {
  std::string system;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{1};
  int electrons = 4;
  double rs = 5.0;
  double volume = 0.0;
  std::vector<std::string> charges;
  std::optional<double> eps_tot;
  std::string scheme;
  std::string mode = "min-t";
  std::string output;
  double zero_cutoff = kDefaultZeroCutoff;
};

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err) {
  ScanConfig c;
  if (o.system == "random" || o.system == "random-dense") {
    c.system = ScanSystem::random_dense;
  } else if (o.system == "ueg") {
    c.system = ScanSystem::ueg;
  } else if (o.system == "material") {
    c.system = ScanSystem::material;
  } else {
    throw UsageError("--system must be random, ueg or material");
  }
  if (o.sizes.empty()) throw UsageError("--sizes needs at least one value");
  for (auto v : o.sizes) {
    const std::uint64_t d = c.system == ScanSystem::random_dense ? v : v * v * v;
    if (v == 0 || !is_power_of_two(d)) throw UsageError("scan sizes must give D = 2^M");
    if (c.system != ScanSystem::random_dense && v < 2) throw UsageError("grid sides must be >= 2");
  }
  if (o.electrons < 2) throw UsageError("--n must be at least 2");
  if (o.seeds.empty()) throw UsageError("--seeds needs at least one value");
  if (o.eps_tot && !(*o.eps_tot > 0.0)) throw UsageError("--eps-tot must be positive");
  c.sizes = o.sizes;
  c.seeds = o.seeds;
  c.electrons = o.electrons;
  c.wigner_seitz_radius = o.rs;
  c.volume = o.volume;
  for (const auto& s : o.charges) c.charges.push_back(parse_charge(s));
  if (c.system == ScanSystem::material && !(c.volume > 0.0)) {
    throw UsageError("--volume must be positive");
  }
  if (c.system == ScanSystem::ueg && !(c.wigner_seitz_radius > 0.0)) {
    throw UsageError("--rs must be positive");
  }
  c.eps_tot = o.eps_tot;
  c.scheme = o.scheme.empty() ? (c.system == ScanSystem::random_dense ? BudgetScheme::molecular
                                                                      : BudgetScheme::dpw)
                              : parse_scheme(o.scheme);
  c.mode = parse_mode(o.mode);
  c.zero_cutoff = o.zero_cutoff;

  const auto rows = run_scan(c);
  const auto fits = fit_scan(rows);
  std::set<std::size_t> distinct;
  for (const auto& r : rows) distinct.insert(r.dim);
  if (distinct.size() < 2) err << "warning: fewer than two basis sizes; fit skipped\n";
  if (o.output.empty()) {
    write_scan_csv(out, rows, fits);
  } else {
    std::ofstream f;
    open_output(f, o.output);
    write_scan_csv(f, rows, fits);
  }
  return kOk;
}

ScanRow scan_point(const ScanConfig& c, std::size_t size, std::optional<std::uint64_t> seed) {
  ScanRow row;
  row.seed = seed;
  SparseLcu sparse;
  if (c.system == ScanSystem::random_dense) {
    row.dim = size;
    const CanonicalLcu lcu = decompose(gen_random_dense(size, *seed), c.electrons, c.zero_cutoff);
    const LcuSummary s = one_norm(lcu);
    row.lambda_1 = s.lambda_one;
    row.lambda_2 = s.lambda_two;
    row.lambda_T = row.lambda_U = row.lambda_V = kNaN;
    row.nnz = static_cast<double>(s.nnz_two_unique);
    sparse = assemble_general(lcu);
  } else {
    const CellSpec cell = c.system == ScanSystem::ueg
                              ? CellSpec::uniform_electron_gas(c.electrons, c.wigner_seitz_radius,
                                                               static_cast<int>(size))
                              : CellSpec::with_volume(c.electrons, c.volume, static_cast<int>(size));
    const DiagonalHamiltonian h =
        c.system == ScanSystem::ueg ? gen_ueg_dpw(cell) : gen_material_dpw(cell, c.charges);
    row.dim = h.dim();
    const DiagonalLcu lcu = decompose_diagonal(h, c.electrons, c.zero_cutoff);
    const NormBreakdown b = norm_breakdown(h, lcu);
    row.lambda_1 = b.lambda_1;
    row.lambda_2 = b.lambda_2;
    row.lambda_T = b.lambda_T;
    row.lambda_U = b.lambda_U;
    row.lambda_V = b.lambda_V;
    row.nnz = static_cast<double>(count_diagonal_L(lcu) - lcu.one.size());
    sparse = assemble_diagonal(lcu);
  }
  row.l = static_cast<double>(sparse.size());
  row.toffoli = row.qubits = kNaN;
  if (c.eps_tot && !sparse.empty()) {
    const CostParams params = CostParams::from_budget(*c.eps_tot, c.scheme, c.mode);
    const SparseLcu kept = params.eps_trunc > 0.0 ? truncate(sparse, params.eps_trunc) : sparse;
    if (!kept.empty()) {
      const ResourceEstimate e = estimate(kept, params);
      row.toffoli = static_cast<double>(e.total_toffolis);
      row.qubits = static_cast<double>(e.logical_qubits);
    }
  }
  return row;
}

std::string csv_value(double v) { return std::isnan(v) ? "nan" : format_double(v); }

}  // namespace

PointCharge parse_charge(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad point charge '" + text + "'");
    }
  }
  if (v.size() != 4) throw std::invalid_argument("point charge needs 'Z,x,y,z'");
  return PointCharge{v[0], {v[1], v[2], v[3]}};
}

std::vector<ScanRow> run_scan(const ScanConfig& config) {
  std::vector<std::pair<std::size_t, std::optional<std::uint64_t>>> points;
  for (auto size : config.sizes) {
    if (config.system == ScanSystem::random_dense) {
      for (auto seed : config.seeds) points.emplace_back(size, seed);
    } else {
      points.emplace_back(size, std::nullopt);
    }
  }
  std::vector<ScanRow> rows(points.size());
  parallel_for(0, points.size(), [&](std::size_t i) {
    rows[i] = scan_point(config, points[i].first, points[i].second);
  });
  return rows;
}

std::vector<ScanFit> fit_scan(const std::vector<ScanRow>& rows) {
  std::vector<std::size_t> dims;
  for (const auto& r : rows) dims.push_back(r.dim);
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  if (dims.size() < 2) return {};
  if (dims.size() > 3) dims.erase(dims.begin(), dims.end() - 3);
  using Getter = double (*)(const ScanRow&);
  const std::vector<std::pair<std::string, Getter>> columns = {
      {"lambda_1", [](const ScanRow& r) { return r.lambda_1; }},
      {"lambda_2", [](const ScanRow& r) { return r.lambda_2; }},
      {"lambda_T", [](const ScanRow& r) { return r.lambda_T; }},
      {"lambda_U", [](const ScanRow& r) { return r.lambda_U; }},
      {"lambda_V", [](const ScanRow& r) { return r.lambda_V; }},
      {"L", [](const ScanRow& r) { return r.l; }},
      {"NNZ", [](const ScanRow& r) { return r.nnz; }},
      {"toffoli", [](const ScanRow& r) { return r.toffoli; }},
      {"qubits", [](const ScanRow& r) { return r.qubits; }},
  };
  std::vector<ScanFit> fits;
  for (const auto& [name, get] : columns) {
    std::vector<double> xs;
    std::vector<double> ys;
    bool usable = true;
    for (auto d : dims) {
      double sum = 0.0;
      int count = 0;
      for (const auto& r : rows) {
        if (r.dim != d) continue;
        sum += get(r);
        ++count;
      }
      const double mean = sum / count;
      if (!(mean > 0.0)) usable = false;
      xs.push_back(static_cast<double>(d));
      ys.push_back(mean);
    }
    if (!usable) continue;
    const PowerLaw p = power_law_fit(xs, ys);
    fits.push_back({name, p.exponent, p.prefactor});
  }
  return fits;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows,
                    const std::vector<ScanFit>& fits) {
  out << "# fqlcu-scan v1\n"
      << "D,seed,lambda_1,lambda_2,lambda_T,lambda_U,lambda_V,L,NNZ,toffoli,qubits\n";
  for (const auto& r : rows) {
    out << r.dim << ',' << (r.seed ? std::to_string(*r.seed) : std::string("nan")) << ','
        << csv_value(r.lambda_1) << ',' << csv_value(r.lambda_2) << ','
        << csv_value(r.lambda_T) << ',' << csv_value(r.lambda_U) << ','
        << csv_value(r.lambda_V) << ',' << csv_value(r.l) << ',' << csv_value(r.nnz) << ','
        << csv_value(r.toffoli) << ',' << csv_value(r.qubits) << '\n';
  }
  for (const auto& f : fits) {
    out << "# fit " << f.column << " exponent=" << format_double(f.exponent)
        << " prefactor=" << format_double(f.prefactor) << '\n';
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pauli LCU decompositions and qubitized phase estimation costs in first quantization",
               "fqlcu"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  DecomposeOptions dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Pauli LCU decomposition and one-norm");
  add_source_options(decompose_cmd, dec.source);
  decompose_cmd->add_option("--coeffs", dec.coeffs, "Write <prefix>.one.csv and <prefix>.two.csv");
  decompose_cmd->add_option("--binary", dec.binary, "Write the block-encoding coefficient list");

  EstimateOptions est;
  auto* estimate_cmd = app.add_subcommand("estimate", "Toffoli and logical qubit estimate");
  add_source_options(estimate_cmd, est.source);
  estimate_cmd->add_option("--lcu", est.lcu, "Binary coefficient list from decompose --binary");
  estimate_cmd->add_option("--eps-tot", est.eps_tot, "Total error budget (Hartree)");
  estimate_cmd->add_option("--mode", est.mode, "min-t or min-qu");
  estimate_cmd->add_option("--scheme", est.scheme, "molecular or dpw error split");
  estimate_cmd->add_option("--trunc-budget", est.trunc_budget,
                           "Discarded one-norm budget (default: truncation share of eps-tot)");
  estimate_cmd->add_option("--aleph", est.aleph, "Keep-probability bits");
  estimate_cmd->add_option("--kappa1", est.kappa1, "QROAM parallelism (power of two)");
  estimate_cmd->add_option("--kappa2", est.kappa2, "QROAM uncompute parallelism (power of two)");
  estimate_cmd->add_option("--bl", est.b_l, "Rotation bits for the L superposition");
  estimate_cmd->add_option("--bn", est.b_n, "Rotation bits for the electron-pair superposition");
  estimate_cmd->add_option("--physical-multiplier", est.physical_multiplier,
                           "Physical qubits per logical qubit");

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "One-norm and cost scaling scan");
  scan_cmd->add_option("--system", scan.system, "random, ueg or material")->required();
  scan_cmd->add_option("--sizes", scan.sizes, "D values (random) or grid sides")
      ->delimiter(',')
      ->required();
  scan_cmd->add_option("--seeds", scan.seeds, "Seeds for random systems")->delimiter(',');
  scan_cmd->add_option("--n", scan.electrons, "Electron count");
  scan_cmd->add_option("--rs", scan.rs, "Wigner-Seitz radius (ueg)");
  scan_cmd->add_option("--volume", scan.volume, "Cell volume (material)");
  scan_cmd->add_option("--charge", scan.charges, "Point charge 'Z,x,y,z' (material)");
  scan_cmd->add_option("--eps-tot", scan.eps_tot, "Total error budget for cost columns");
  scan_cmd->add_option("--scheme", scan.scheme, "molecular or dpw");
  scan_cmd->add_option("--mode", scan.mode, "min-t or min-qu");
  scan_cmd->add_option("--output", scan.output, "CSV output path (default stdout)");
  scan_cmd->add_option("--zero-cutoff", scan.zero_cutoff, "Coefficient zero threshold");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Dense brute-force oracle checks");
  add_source_options(verify_cmd, ver.source);
  verify_cmd->add_option("--trunc-budget", ver.trunc_budget, "Also check truncation at this budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(dec, out);
    if (estimate_cmd->parsed()) return cmd_estimate(est, out);
    if (scan_cmd->parsed()) return cmd_scan(scan, out, err);
    if (verify_cmd->parsed()) return cmd_verify(ver, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ZeroNormError& e) {
    err << "error: " << e.what() << '\n';
    return kZeroNorm;
  } catch (const GuardExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fqlcu::cli
