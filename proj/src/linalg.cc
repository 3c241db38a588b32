// Copyright 2026 The xkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xkit/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "xkit/error.h"

namespace xkit {

double max_abs(const ComplexMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

HermitianOperator HermitianOperator::from_matrix(ComplexMatrix m, double herm_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator must be a nonempty square matrix, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  double asym = max_abs(m - m.adjoint());
  if (asym > herm_tol) {
    throw Error(ErrorKind::NotHermitian, "operator differs from its adjoint by " + std::to_string(asym));
  }
  if (asym > 0.0) {
    m = (0.5 * (m + m.adjoint())).eval();
  }
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::zero(size_t dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(size_t dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> entries) {
  ComplexMatrix m = ComplexMatrix::Zero(entries.size(), entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    m(i, i) = entries[i];
  }
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::diagonal(std::initializer_list<double> entries) {
  return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

HermitianOperator HermitianOperator::projector(const ComplexVector &v) {
  double norm2 = v.squaredNorm();
  if (norm2 == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "cannot project onto the zero vector");
  }
  ComplexMatrix m = v * v.adjoint() / norm2;
  // v v† is Hermitian up to rounding in the off-diagonal products.
  m = (0.5 * (m + m.adjoint())).eval();
  return HermitianOperator(std::move(m));
}

double HermitianOperator::trace() const {
  return m_.trace().real();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator &other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operator dimensions differ");
  }
  return HermitianOperator(m_ + other.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator &other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operator dimensions differ");
  }
  return HermitianOperator(m_ - other.m_);
}

HermitianOperator &HermitianOperator::operator+=(const HermitianOperator &other) {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operator dimensions differ");
  }
  m_ += other.m_;
  return *this;
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s);
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

double off_diagonal_norm2(const ComplexMatrix &a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) {
        s += std::norm(a(i, j));
      }
    }
  }
  return s;
}

// Zeroes a(p,q) with the unitary V = diag(1, conj(w)) · R(θ), where w is the
// phase of a(p,q) and R the real Jacobi rotation of the rephased block.
void rotate(ComplexMatrix &a, ComplexMatrix &vecs, Eigen::Index p, Eigen::Index q) {
  Complex apq = a(p, q);
  double r = std::abs(apq);
  if (r == 0.0) {
    return;
  }
  Complex w = apq / r;
  double app = a(p, p).real();
  double aqq = a(q, q).real();
  double theta = (aqq - app) / (2.0 * r);
  double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  double c = 1.0 / std::sqrt(t * t + 1.0);
  double s = t * c;

  const Complex vpp = c;
  const Complex vpq = s;
  const Complex vqp = -s * std::conj(w);
  const Complex vqq = c * std::conj(w);

  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex aip = a(i, p);
    Complex aiq = a(i, q);
    a(i, p) = aip * vpp + aiq * vqp;
    a(i, q) = aip * vpq + aiq * vqq;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex apj = a(p, j);
    Complex aqj = a(q, j);
    a(p, j) = std::conj(vpp) * apj + std::conj(vqp) * aqj;
    a(q, j) = std::conj(vpq) * apj + std::conj(vqq) * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index i = 0; i < n; ++i) {
    Complex vip = vecs(i, p);
    Complex viq = vecs(i, q);
    vecs(i, p) = vip * vpp + viq * vqp;
    vecs(i, q) = vip * vpq + viq * vqq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianOperator &h, const EigenOptions &options) {
  const Eigen::Index n = static_cast<Eigen::Index>(h.dim());
  ComplexMatrix a = h.matrix();
  ComplexMatrix vecs = ComplexMatrix::Identity(n, n);

  const double total = a.squaredNorm();
  const double target = total * 1e-28;
  const size_t max_sweeps = std::max<size_t>(1, options.sweeps_per_dim2 * static_cast<size_t>(n * n));
  size_t sweep = 0;
  while (off_diagonal_norm2(a) > target) {
    if (sweep++ >= max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi eigensolver did not converge within " + std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(a, vecs, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = vecs.col(order[k]).normalized();
  }
  return out;
}

MinEigenpair min_eig(const HermitianOperator &h) {
  EigenDecomposition e = eig_hermitian(h);
  return {e.eigenvalues(0), e.eigenvectors.col(0)};
}

double lambda_min(const HermitianOperator &h) {
  return eig_hermitian(h).eigenvalues(0);
}

double lambda_max(const HermitianOperator &h) {
  EigenDecomposition e = eig_hermitian(h);
  return e.eigenvalues(e.eigenvalues.size() - 1);
}

bool is_psd(const HermitianOperator &h, double tol) {
  return lambda_min(h) >= -tol;
}

double trace_product(const HermitianOperator &a, const HermitianOperator &b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "trace_product: operator dimensions differ");
  }
  // Tr(AB) = Σ_ij A_ij B_ji
  Complex tr = (a.matrix().array() * b.matrix().transpose().array()).sum();
  double scale = std::max(1.0, a.matrix().norm() * b.matrix().norm());
  if (std::abs(tr.imag()) > 1e-9 * scale) {
    throw Error(ErrorKind::NumericalInstability, "trace_product: Tr(AB) has a non-negligible imaginary part");
  }
  return tr.real();
}

}  // namespace xkit
