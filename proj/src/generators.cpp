// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fqlcu/bits.hpp"
#include "fqlcu/errors.hpp"
#include "fqlcu/sources.hpp"

namespace fqlcu {

namespace {

using Index3 = std::array<long, 3>;

std::vector<Index3> frequency_grid(int n) {
  const long lo = -(n / 2);
  std::vector<Index3> nu;
  nu.reserve(static_cast<std::size_t>(n) * n * n);
  for (long a = lo; a < lo + n; ++a)
    for (long b = lo; b < lo + n; ++b)
      for (long c = lo; c < lo + n; ++c) nu.push_back({a, b, c});
  return nu;
}

Index3 grid_coords(std::size_t p, int n) {
  const auto un = static_cast<std::size_t>(n);
  return {static_cast<long>(p / (un * un)), static_cast<long>((p / un) % un),
          static_cast<long>(p % un)};
}

std::size_t displacement_index(const Index3& d, int n) {
  const auto wrap = [n](long v) { return static_cast<std::size_t>(((v % n) + n) % n); };
  const auto un = static_cast<std::size_t>(n);
  return (wrap(d[0]) * un + wrap(d[1])) * un + wrap(d[2]);
}

// Kernel table over integer displacements d: sum_nu weight(nu) cos(2 pi nu.d / n),
// with the phase reduced modulo n before conversion. Entries for d and -d are
// taken from a single evaluation so the assembled matrices are exactly symmetric.
template <class Weight>
std::vector<double> displacement_kernel(int n, const std::vector<Index3>& nu,
                                        Weight weight) {
  const std::size_t d_count = static_cast<std::size_t>(n) * n * n;
  std::vector<double> w(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) w[i] = weight(nu[i]);
  std::vector<double> table(d_count, 0.0);
  std::vector<bool> done(d_count, false);
  for (std::size_t di = 0; di < d_count; ++di) {
    if (done[di]) continue;
    const Index3 d = grid_coords(di, n);
    double sum = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (w[i] == 0.0) continue;
      const long dot = nu[i][0] * d[0] + nu[i][1] * d[1] + nu[i][2] * d[2];
      const long phase = ((dot % n) + n) % n;
      sum += w[i] * std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) / n);
    }
    const std::size_t neg = displacement_index({-d[0], -d[1], -d[2]}, n);
    table[di] = sum;
    table[neg] = sum;
    done[di] = true;
    done[neg] = true;
  }
  return table;
}

RealMatrix circulant(const std::vector<double>& table, int n) {
  const std::size_t dim = static_cast<std::size_t>(n) * n * n;
  RealMatrix m(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const Index3 a = grid_coords(p, n);
    for (std::size_t q = 0; q < dim; ++q) {
      const Index3 b = grid_coords(q, n);
      m(p, q) = table[displacement_index({a[0] - b[0], a[1] - b[1], a[2] - b[2]}, n)];
    }
  }
  return m;
}

void check_cell(const CellSpec& cell) {
  if (!(cell.volume > 0.0)) throw std::invalid_argument("cell volume must be positive");
  if (cell.grid_side < 2) throw std::invalid_argument("dual plane waves need grid_side >= 2");
  if (!is_power_of_two(cell.basis_size())) {
    throw UnsupportedDimensionError("grid_side^3 = " + std::to_string(cell.basis_size()) +
                                    " is not a power of two");
  }
}

struct DpwParts {
  RealMatrix kinetic;
  RealMatrix coulomb;
};

DpwParts dpw_parts(const CellSpec& cell) {
  check_cell(cell);
  const int n = cell.grid_side;
  const double dim = static_cast<double>(cell.basis_size());
  const double k_unit = 2.0 * std::numbers::pi / cell.box_length();
  const auto nu = frequency_grid(n);
  const auto k2 = [k_unit](const Index3& v) {
    return k_unit * k_unit *
           static_cast<double>(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  };
  const auto kin = displacement_kernel(n, nu, [&](const Index3& v) {
    return k2(v) / (2.0 * dim);
  });
  const double coulomb_scale = 2.0 * std::numbers::pi / cell.volume;
  const auto coul = displacement_kernel(n, nu, [&](const Index3& v) {
    const double kk = k2(v);
    return kk == 0.0 ? 0.0 : coulomb_scale / kk;
  });
  return {circulant(kin, n), circulant(coul, n)};
}

}  // namespace

GeneralHamiltonian gen_random_dense(std::size_t dim, std::uint64_t seed) {
  if (!is_power_of_two(dim)) {
    throw UnsupportedDimensionError("dimension " + std::to_string(dim) +
                                    " is not a power of two");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  RealMatrix h1(dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = uniform(rng);
      h1(p, q) = v;
      h1(q, p) = v;
    }
  RealTensor4 h2(dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r <= p; ++r)
        for (std::size_t s = 0; s <= (r == p ? q : r); ++s) {
          const double v = uniform(rng);
          h2(p, q, r, s) = v;
          h2(q, p, r, s) = v;
          h2(p, q, s, r) = v;
          h2(q, p, s, r) = v;
          h2(r, s, p, q) = v;
          h2(s, r, p, q) = v;
          h2(r, s, q, p) = v;
          h2(s, r, q, p) = v;
        }
  return GeneralHamiltonian(std::move(h1), std::move(h2));
}

std::array<double, 3> grid_point(const CellSpec& cell, std::size_t p) {
  const Index3 c = grid_coords(p, cell.grid_side);
  const double h = cell.box_length() / cell.grid_side;
  return {c[0] * h, c[1] * h, c[2] * h};
}

DiagonalHamiltonian gen_ueg_dpw(const CellSpec& cell) {
  auto parts = dpw_parts(cell);
  RealMatrix external(cell.basis_size());
  return DiagonalHamiltonian(std::move(parts.kinetic), std::move(external),
                             std::move(parts.coulomb));
}

DiagonalHamiltonian gen_material_dpw(const CellSpec& cell,
                                     std::span<const PointCharge> charges) {
  auto parts = dpw_parts(cell);
  const std::size_t dim = cell.basis_size();
  const double k_unit = 2.0 * std::numbers::pi / cell.box_length();
  const double scale = -4.0 * std::numbers::pi / cell.volume;
  const auto nu = frequency_grid(cell.grid_side);
  RealMatrix external(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const auto r = grid_point(cell, p);
    double sum = 0.0;
    for (const auto& v : nu) {
      const double k2 = k_unit * k_unit * static_cast<double>(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (k2 == 0.0) continue;
      double s = 0.0;
      for (const auto& c : charges) {
        const double phase = k_unit * (v[0] * (c.position[0] - r[0]) +
                                       v[1] * (c.position[1] - r[1]) +
                                       v[2] * (c.position[2] - r[2]));
        s += c.charge * std::cos(phase);
      }
      sum += s / k2;
    }
    external(p, p) = scale * sum;
  }
  return DiagonalHamiltonian(std::move(parts.kinetic), std::move(external),
                             std::move(parts.coulomb));
}

}  // namespace fqlcu
