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

#include <cmath>
#include <string>

#include "xkit/error.h"
#include "xkit/objects.h"

namespace xkit {

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix gaussian_matrix(size_t rows, size_t cols, Rng &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

HermitianOperator random_density_matrix(size_t dim, Rng &rng) {
  ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  ComplexMatrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint());
  w /= w.trace().real();
  return HermitianOperator::from_matrix(std::move(w));
}

HermitianOperator random_pure_state(size_t dim, Rng &rng) {
  return HermitianOperator::projector(gaussian_matrix(dim, 1, rng).col(0));
}

ComplexMatrix random_unitary(size_t dim, Rng &rng) {
  ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Complex rjj = r(j, j);
    double mag = std::abs(rjj);
    if (mag > 0.0) {
      q.col(j) *= rjj / mag;
    }
  }
  return q;
}

namespace {

constexpr int kMaxNormalizationRetries = 8;

std::optional<Povm> try_random_povm(size_t dim, size_t outcomes, uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g = gaussian_matrix(dim * outcomes, dim, rng);
  ComplexMatrix s = g.adjoint() * g;
  s = 0.5 * (s + s.adjoint());
  EigenDecomposition es = eig_hermitian(HermitianOperator::from_matrix(s));
  double lmin = es.eigenvalues(0);
  double lmax = es.eigenvalues(es.eigenvalues.size() - 1);
  if (!(lmin > 1e-10 * lmax)) {
    return std::nullopt;
  }
  RealVector inv_sqrt = es.eigenvalues.cwiseSqrt().cwiseInverse();
  ComplexMatrix s_inv_half = es.eigenvectors * inv_sqrt.cast<Complex>().asDiagonal() * es.eigenvectors.adjoint();

  std::vector<HermitianOperator> effects;
  effects.reserve(outcomes);
  for (size_t a = 0; a < outcomes; ++a) {
    ComplexMatrix block = g.middleRows(static_cast<Eigen::Index>(a * dim), static_cast<Eigen::Index>(dim));
    ComplexMatrix m = s_inv_half * (block.adjoint() * block) * s_inv_half;
    m = 0.5 * (m + m.adjoint());
    effects.push_back(HermitianOperator::from_matrix(std::move(m)));
  }
  return Povm::validate(std::move(effects));
}

}  // namespace

Povm random_povm(size_t dim, size_t outcomes, uint64_t seed) {
  if (dim < 2 || outcomes < 2) {
    throw Error(ErrorKind::InvalidArgument, "random_povm needs dim >= 2 and outcomes >= 2");
  }
  uint64_t s = seed;
  for (int attempt = 0; attempt <= kMaxNormalizationRetries; ++attempt) {
    if (auto m = try_random_povm(dim, outcomes, s)) {
      return *m;
    }
    s = derive_seed(seed, static_cast<uint64_t>(attempt));
  }
  throw Error(ErrorKind::SingularNormalization,
              "random_povm: normalization matrix singular after " + std::to_string(kMaxNormalizationRetries) +
                  " retries");
}

Povm random_projective_povm(size_t dim, uint64_t seed) {
  if (dim < 2) {
    throw Error(ErrorKind::InvalidArgument, "random_projective_povm needs dim >= 2");
  }
  Rng rng(seed);
  ComplexMatrix u = random_unitary(dim, rng);
  std::vector<HermitianOperator> effects;
  effects.reserve(dim);
  for (size_t a = 0; a < dim; ++a) {
    effects.push_back(HermitianOperator::projector(u.col(static_cast<Eigen::Index>(a))));
  }
  return Povm::validate(std::move(effects));
}

std::vector<double> random_simplex_point(size_t n, Rng &rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto &v : p) {
    v = expo(rng);
    total += v;
  }
  for (auto &v : p) {
    v /= total;
  }
  return p;
}

Povm random_uninformative_povm(size_t dim, size_t outcomes, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> q = random_simplex_point(outcomes, rng);
  std::vector<HermitianOperator> effects;
  effects.reserve(outcomes);
  for (double qa : q) {
    effects.push_back(qa * HermitianOperator::identity(dim));
  }
  return Povm::validate(std::move(effects));
}

Ensemble random_ensemble(size_t dim, size_t k, uint64_t seed, const EnsembleOptions &options) {
  if (dim < 1 || k < 1) {
    throw Error(ErrorKind::InvalidArgument, "random_ensemble needs dim >= 1 and k >= 1");
  }
  Rng rng(seed);
  std::vector<HermitianOperator> states;
  states.reserve(k);
  for (size_t x = 0; x < k; ++x) {
    states.push_back(random_density_matrix(dim, rng));
  }
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> priors(k);
  double total = 0.0;
  for (auto &p : priors) {
    p = uniform(rng);
    total += p;
  }
  double clamped_total = 0.0;
  for (auto &p : priors) {
    p = std::max(p / total, options.min_prior);
    clamped_total += p;
  }
  for (auto &p : priors) {
    p /= clamped_total;
  }
  return Ensemble::validate(std::move(states), std::move(priors));
}

StochasticMap random_stochastic_map(size_t rows, size_t cols, uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd t(rows, cols);
  for (size_t a = 0; a < rows; ++a) {
    std::vector<double> row = random_simplex_point(cols, rng);
    for (size_t x = 0; x < cols; ++x) {
      t(a, x) = row[x];
    }
  }
  return StochasticMap::validate(std::move(t));
}

}  // namespace xkit
