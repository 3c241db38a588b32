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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "xkit/linalg.h"
#include "xkit/tolerances.h"

namespace xkit {

// Conditional probability table q(x|a): row a is the input outcome, column x
// the output. Every row is a probability distribution.
class StochasticMap {
 public:
  // Throws Error(InvalidDistribution, row) on negative entries or rows that
  // do not sum to one.
  static StochasticMap validate(Eigen::MatrixXd table, const Tolerances &tol = {});
  static StochasticMap identity(size_t n);
  // q(x|a) = δ_{x, assignment[a]}.
  static StochasticMap deterministic(const std::vector<size_t> &assignment, size_t cols);
  // q(x|a) = dist[x] for every a.
  static StochasticMap constant(size_t rows, const std::vector<double> &dist);

  size_t rows() const { return static_cast<size_t>(table_.rows()); }
  size_t cols() const { return static_cast<size_t>(table_.cols()); }
  double operator()(size_t a, size_t x) const { return table_(a, x); }
  const Eigen::MatrixXd &table() const { return table_; }

  // Apply this map, then `next`: r(y|a) = Σ_x next(y|x) q(x|a).
  StochasticMap then(const StochasticMap &next) const;

 private:
  explicit StochasticMap(Eigen::MatrixXd table) : table_(std::move(table)) {}
  Eigen::MatrixXd table_;
};

// Positive effects {M_a} summing to the identity.
class Povm {
 public:
  // Throws Error(NotPsd, a), Error(CompletenessViolation) or
  // Error(DimensionMismatch, a).
  static Povm validate(std::vector<HermitianOperator> effects, const Tolerances &tol = {});

  size_t dim() const { return effects_.front().dim(); }
  size_t outcomes() const { return effects_.size(); }
  const std::vector<HermitianOperator> &effects() const { return effects_; }
  const HermitianOperator &operator[](size_t a) const { return effects_[a]; }

 private:
  explicit Povm(std::vector<HermitianOperator> effects) : effects_(std::move(effects)) {}
  std::vector<HermitianOperator> effects_;
};

// Effects given as raw matrices; Hermiticity is checked per effect and
// reported as Error(NotHermitian, a).
Povm validate_povm(const std::vector<ComplexMatrix> &candidate, const Tolerances &tol = {});

// States ρ_x sent with prior probabilities p(x).
class Ensemble {
 public:
  // Throws Error(NotPsd, x) / Error(InvalidDistribution) / Error(DimensionMismatch, x).
  static Ensemble validate(std::vector<HermitianOperator> states, std::vector<double> priors,
                           const Tolerances &tol = {});

  size_t dim() const { return states_.front().dim(); }
  size_t size() const { return states_.size(); }
  const std::vector<HermitianOperator> &states() const { return states_; }
  const std::vector<double> &priors() const { return priors_; }
  const HermitianOperator &state(size_t x) const { return states_[x]; }
  double prior(size_t x) const { return priors_[x]; }

 private:
  Ensemble(std::vector<HermitianOperator> states, std::vector<double> priors)
      : states_(std::move(states)), priors_(std::move(priors)) {}
  std::vector<HermitianOperator> states_;
  std::vector<double> priors_;
};

// q(a) with M_a = q(a)·𝟙 for every effect, or nullopt.
std::optional<std::vector<double>> is_uninformative(const Povm &m, double tol);

// N_x = Σ_a q(x|a) M_a.
Povm apply_postprocessing(const Povm &m, const StochasticMap &q, const Tolerances &tol = {});

// p·M1 + (1 − p)·M2, outcome by outcome.
Povm mix(const Povm &m1, const Povm &m2, double p, const Tolerances &tol = {});

// ---- seeded instance generators -------------------------------------------

// splitmix64 step; derives independent stream seeds from a base seed.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

using Rng = std::mt19937_64;

ComplexMatrix gaussian_matrix(size_t rows, size_t cols, Rng &rng);
// Normalized Wishart sample G G† / Tr(G G†).
HermitianOperator random_density_matrix(size_t dim, Rng &rng);
// Haar-random pure state projector.
HermitianOperator random_pure_state(size_t dim, Rng &rng);
// Haar-random unitary (QR of a Gaussian matrix with phase fix).
ComplexMatrix random_unitary(size_t dim, Rng &rng);

// M_a = S^{-1/2} G_a† G_a S^{-1/2} with G a (d·o)×d Gaussian matrix split
// into o blocks and S = G†G. Retries with derived seeds when S is singular.
Povm random_povm(size_t dim, size_t outcomes, uint64_t seed);
// Rank-one projective measurement in a Haar-random basis (o = d).
Povm random_projective_povm(size_t dim, uint64_t seed);
// {q(a)·𝟙} with q drawn uniformly from the simplex.
Povm random_uninformative_povm(size_t dim, size_t outcomes, uint64_t seed);

struct EnsembleOptions {
  // Every prior is clamped to at least this value before renormalizing.
  double min_prior = 1e-3;
};

// Wishart states, priors uniform-then-normalized then clamped.
Ensemble random_ensemble(size_t dim, size_t k, uint64_t seed, const EnsembleOptions &options = {});
// Rows drawn uniformly from the simplex.
StochasticMap random_stochastic_map(size_t rows, size_t cols, uint64_t seed);
// Point on the probability simplex, uniform (Dirichlet(1,...,1)).
std::vector<double> random_simplex_point(size_t n, Rng &rng);

}  // namespace xkit
