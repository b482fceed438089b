// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqlcu/verifier.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <stdexcept>
#include <string>

#include "fqlcu/errors.hpp"

namespace fqlcu {

namespace {

using Complex = std::complex<double>;

// factor[pk][qk] = X^pk Z^qk as a literal 2x2 product.
std::array<std::array<Eigen::Matrix2cd, 2>, 2> single_qubit_factors() {
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  return {{{id, z}, {x, Eigen::Matrix2cd(x * z)}}};
}

const auto& factors() {
  static const auto f = single_qubit_factors();
  return f;
}

struct StringFactor {
  int electron;
  std::uint32_t p;
  std::uint32_t q;
};

class Layout {
 public:
  Layout(int electrons, int index_bits)
      : n_(electrons), m_(index_bits), qubits_(electrons * index_bits) {}

  std::size_t dim() const { return std::size_t{1} << qubits_; }
  int position(int electron, int k) const { return qubits_ - 1 - (electron * m_ + k); }

  std::size_t orbital(std::size_t x, int electron) const {
    std::size_t p = 0;
    for (int k = 0; k < m_; ++k) p |= ((x >> position(electron, k)) & 1u) << k;
    return p;
  }
  std::size_t with_orbital(std::size_t x, int electron, std::size_t p) const {
    for (int k = 0; k < m_; ++k) {
      const int pos = position(electron, k);
      x = (x & ~(std::size_t{1} << pos)) | (((p >> k) & 1u) << pos);
    }
    return x;
  }

  // matrix += c * (product of the given per-electron strings).
  void add_string(Eigen::MatrixXcd& matrix, Complex c,
                  std::initializer_list<StringFactor> parts) const {
    const auto& f = factors();
    for (std::size_t x = 0; x < dim(); ++x) {
      std::size_t y = x;
      Complex v = c;
      for (const auto& s : parts) {
        for (int k = 0; k < m_; ++k) {
          const int pos = position(s.electron, k);
          const unsigned pk = (s.p >> k) & 1u;
          const unsigned qk = (s.q >> k) & 1u;
          const unsigned b = (x >> pos) & 1u;
          const unsigned b_out = b ^ pk;
          v *= f[pk][qk](b_out, b);
          y ^= std::size_t{pk} << pos;
        }
      }
      matrix(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += v;
    }
  }

  int electrons() const { return n_; }
  int index_bits() const { return m_; }

 private:
  int n_;
  int m_;
  int qubits_;
};

DenseOperator zero_operator(int electrons, int index_bits) {
  check_oracle_size(electrons, index_bits);
  DenseOperator op;
  op.electrons = electrons;
  op.index_bits = index_bits;
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << (electrons * index_bits));
  op.matrix = Eigen::MatrixXcd::Zero(d, d);
  return op;
}

void add_identity(DenseOperator& op, double shift) {
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i) op.matrix(i, i) += shift;
}

}  // namespace

void check_oracle_size(int electrons, int index_bits) {
  if (electrons < 2) throw std::invalid_argument("dense oracle needs N >= 2");
  if (index_bits < 0) throw std::invalid_argument("negative index width");
  if (electrons * index_bits > kMaxOracleQubits) {
    throw GuardExceededError("dense oracle needs " + std::to_string(electrons * index_bits) +
                             " qubits, limit is " + std::to_string(kMaxOracleQubits));
  }
}

std::size_t orbital_of(std::size_t x, int electron, int electrons, int index_bits) {
  return Layout(electrons, index_bits).orbital(x, electron);
}

Eigen::MatrixXcd pauli_string_matrix(int index_bits, std::uint32_t p, std::uint32_t q) {
  const Layout layout(1, index_bits);
  const auto d = static_cast<Eigen::Index>(layout.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  layout.add_string(out, 1.0, {{0, p, q}});
  // Relabel from qubit order to orbital index order.
  for (std::size_t x = 0; x < layout.dim(); ++x)
    for (std::size_t y = 0; y < layout.dim(); ++y)
      m(static_cast<Eigen::Index>(layout.orbital(y, 0)),
        static_cast<Eigen::Index>(layout.orbital(x, 0))) =
          out(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
  return m;
}

DenseOperator build_first_quantized(const GeneralHamiltonian& h, int electrons) {
  DenseOperator op = zero_operator(electrons, h.index_bits());
  const Layout layout(electrons, h.index_bits());
  const std::size_t d = h.dim();
  const auto& h1 = h.one_body();
  const auto& h2 = h.two_body();
  for (std::size_t x = 0; x < layout.dim(); ++x) {
    const auto col = static_cast<Eigen::Index>(x);
    for (int i = 0; i < electrons; ++i) {
      const std::size_t oi = layout.orbital(x, i);
      for (std::size_t p = 0; p < d; ++p) {
        const double w = h1(p, oi);
        if (w != 0.0) {
          op.matrix(static_cast<Eigen::Index>(layout.with_orbital(x, i, p)), col) += w;
        }
      }
      for (int j = 0; j < electrons; ++j) {
        if (j == i) continue;
        const std::size_t oj = layout.orbital(x, j);
        for (std::size_t p = 0; p < d; ++p) {
          const std::size_t xp = layout.with_orbital(x, i, p);
          for (std::size_t r = 0; r < d; ++r) {
            const double w = h2(p, oi, r, oj);
            if (w != 0.0) {
              op.matrix(static_cast<Eigen::Index>(layout.with_orbital(xp, j, r)), col) +=
                  0.5 * w;
            }
          }
        }
      }
    }
  }
  return op;
}

DenseOperator build_first_quantized(const DiagonalHamiltonian& h, int electrons) {
  DenseOperator op = zero_operator(electrons, h.index_bits());
  const Layout layout(electrons, h.index_bits());
  const std::size_t d = h.dim();
  const RealMatrix t = h.one_body();
  const auto& v = h.coulomb();
  for (std::size_t x = 0; x < layout.dim(); ++x) {
    const auto col = static_cast<Eigen::Index>(x);
    for (int i = 0; i < electrons; ++i) {
      const std::size_t oi = layout.orbital(x, i);
      for (std::size_t p = 0; p < d; ++p) {
        const double w = t(p, oi);
        if (w != 0.0) {
          op.matrix(static_cast<Eigen::Index>(layout.with_orbital(x, i, p)), col) += w;
        }
      }
      for (int j = 0; j < electrons; ++j) {
        if (j != i) op.matrix(col, col) += 0.5 * v(oi, layout.orbital(x, j));
      }
    }
  }
  return op;
}

DenseOperator reconstruct_from_lcu(const CanonicalLcu& lcu) {
  DenseOperator op = zero_operator(lcu.electrons, lcu.index_bits);
  const Layout layout(lcu.electrons, lcu.index_bits);
  const int n = lcu.electrons;
  for (const auto& [key, w] : lcu.one) {
    const auto k = lcu.one.unpack(key);
    for (int i = 0; i < n; ++i) layout.add_string(op.matrix, w, {{i, k[0], k[1]}});
  }
  for (const auto& [key, w] : lcu.two) {
    const auto k = lcu.two.unpack(key);
    const bool same = k[0] == k[2] && k[1] == k[3];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        layout.add_string(op.matrix, 0.5 * w, {{i, k[0], k[1]}, {j, k[2], k[3]}});
        if (!same) {
          layout.add_string(op.matrix, 0.5 * w, {{i, k[2], k[3]}, {j, k[0], k[1]}});
        }
      }
  }
  add_identity(op, lcu.identity_shift());
  return op;
}

DenseOperator reconstruct_from_lcu(const DiagonalLcu& lcu) {
  DenseOperator op = zero_operator(lcu.electrons, lcu.index_bits);
  const Layout layout(lcu.electrons, lcu.index_bits);
  const int n = lcu.electrons;
  for (const auto& [key, w] : lcu.one) {
    const auto k = lcu.one.unpack(key);
    for (int i = 0; i < n; ++i) layout.add_string(op.matrix, w, {{i, k[0], k[1]}});
  }
  for (const auto& [key, w] : lcu.two) {
    const auto k = lcu.two.unpack(key);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) layout.add_string(op.matrix, 0.5 * w, {{i, 0, k[0]}, {j, 0, k[1]}});
      }
  }
  add_identity(op, lcu.identity_shift());
  return op;
}

DenseOperator reconstruct_from_sparse(const SparseLcu& s, double identity_shift) {
  DenseOperator op = zero_operator(s.electrons(), s.index_bits());
  const Layout layout(s.electrons(), s.index_bits());
  const int n = s.electrons();
  const bool general = s.kind() == LcuKind::general;
  for (const auto& e : s.entries()) {
    const auto k = s.unpack(e.index);
    // general (p, q, r, s): X^p Z^q on i, X^r Z^s on j; diagonal (p, q, r): X^p Z^q on i, Z^r on j.
    const std::uint32_t xj = general ? k[2] : 0;
    const std::uint32_t zj = general ? k[3] : k[2];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          layout.add_string(op.matrix, e.coefficient, {{i, k[0], k[1]}, {j, xj, zj}});
        }
      }
  }
  add_identity(op, identity_shift);
  return op;
}

double max_abs_deviation(const DenseOperator& a, const DenseOperator& b) {
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
    throw std::invalid_argument("operators differ in dimension");
  }
  return (a.matrix - b.matrix).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const DenseOperator& a) {
  if (a.matrix.size() == 0) return 0.0;
  return (a.matrix - a.matrix.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd eigenvalues(const DenseOperator& a) {
  const Eigen::MatrixXcd herm = 0.5 * (a.matrix + a.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return solver.eigenvalues();
}

double max_eigenvalue_displacement(const DenseOperator& a, const DenseOperator& b) {
  const Eigen::VectorXd ea = eigenvalues(a);
  const Eigen::VectorXd eb = eigenvalues(b);
  if (ea.size() != eb.size()) throw std::invalid_argument("operators differ in dimension");
  if (ea.size() == 0) return 0.0;
  return (ea - eb).cwiseAbs().maxCoeff();
}

}  // namespace fqlcu
