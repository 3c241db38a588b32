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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>

#include <Eigen/Dense>

#include "xkit/tolerances.h"

namespace xkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Largest entry modulus.
double max_abs(const ComplexMatrix &m);

// A d×d complex matrix equal to its adjoint within a tolerance. Instances
// built from user data go through from_matrix; the arithmetic operators
// combine operators with real coefficients and so stay Hermitian.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  // Throws Error(NotHermitian) if ‖m − m†‖_max > herm_tol, and
  // Error(DimensionMismatch) if m is not square.
  static HermitianOperator from_matrix(ComplexMatrix m, double herm_tol = Tolerances{}.herm_tol);
  static HermitianOperator zero(size_t dim);
  static HermitianOperator identity(size_t dim);
  static HermitianOperator diagonal(std::span<const double> entries);
  static HermitianOperator diagonal(std::initializer_list<double> entries);
  // |v⟩⟨v| / ⟨v|v⟩.
  static HermitianOperator projector(const ComplexVector &v);

  size_t dim() const { return static_cast<size_t>(m_.rows()); }
  const ComplexMatrix &matrix() const { return m_; }
  Complex operator()(size_t i, size_t j) const { return m_(i, j); }
  double trace() const;

  HermitianOperator operator+(const HermitianOperator &other) const;
  HermitianOperator operator-(const HermitianOperator &other) const;
  HermitianOperator &operator+=(const HermitianOperator &other);
  HermitianOperator operator*(double s) const;
  friend HermitianOperator operator*(double s, const HermitianOperator &h) { return h * s; }

 private:
  explicit HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct EigenDecomposition {
  // Ascending.
  RealVector eigenvalues;
  // Column i is the unit eigenvector of eigenvalues[i].
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

struct EigenOptions {
  // Sweep cap is sweeps_per_dim2 · d².
  size_t sweeps_per_dim2 = 100;
};

// Cyclic complex Jacobi. Equal eigenvalues keep the order in which the
// sweeps left them on the diagonal, so results are deterministic.
// Throws Error(NoConvergence) past the sweep cap.
EigenDecomposition eig_hermitian(const HermitianOperator &h, const EigenOptions &options = {});

struct MinEigenpair {
  double value;
  ComplexVector vector;
};

// Smallest eigenvalue and the first eigenvector in ascending order.
MinEigenpair min_eig(const HermitianOperator &h);
double lambda_min(const HermitianOperator &h);
double lambda_max(const HermitianOperator &h);

bool is_psd(const HermitianOperator &h, double tol);

// Re Tr(AB). Throws Error(DimensionMismatch) on unequal dims and
// Error(NumericalInstability) if the imaginary part is not negligible.
double trace_product(const HermitianOperator &a, const HermitianOperator &b);

}  // namespace xkit
