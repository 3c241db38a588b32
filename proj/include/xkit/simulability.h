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

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "xkit/objects.h"
#include "xkit/simplex.h"
#include "xkit/tolerances.h"

namespace xkit {

// Identity followed by the d² − 1 generalized Gell-Mann matrices (symmetric,
// antisymmetric, then diagonal). Together they span the real space of d×d
// Hermitian matrices, so H = 0 iff Tr(B H) = 0 for every element B.
std::vector<HermitianOperator> gell_mann_basis(size_t dim);

struct Simulable {
  StochasticMap map;
  // max_x ‖Σ_a q(x|a) M_a − N_x‖_max, recomputed after the solve.
  double residual;
};

struct NotSimulable {
  std::optional<Ensemble> witness;
  std::optional<double> violation;
};

struct SimulabilityResult {
  std::variant<Simulable, NotSimulable> verdict;
  // Phase-one optimum of the feasibility LP.
  double infeasibility = 0.0;
  size_t pivots = 0;

  bool simulable() const { return std::holds_alternative<Simulable>(verdict); }
};

// Decides whether N = Σ_a q(x|a) M_a for some stochastic map q by solving
//
//   q(x|a) ≥ 0,   Σ_x q(x|a) = 1,   Σ_a q(x|a) Tr(B_j M_a) = Tr(B_j N_x)
//
// over the Gell-Mann basis {B_j}. A feasible map is accepted only if it
// reproduces N within feas_tol. Throws Error(DimensionMismatch), or
// Error(NumericalInstability) when the LP claims feasibility but its map
// does not reproduce N.
SimulabilityResult check_simulable(const Povm &m, const Povm &n, const Tolerances &tol = {},
                                   const SimplexOptions &lp = {});

// Δ_x = Σ_a p(x|a) M_a − N_x.
struct DeltaOperators {
  std::vector<HermitianOperator> deltas;

  // Σ_x Δ_x; vanishes when p is stochastic and both POVMs are complete.
  HermitianOperator sum() const;
  double sum_residual() const;
};

DeltaOperators delta_operators(const Povm &m, const Povm &n, const StochasticMap &p);

struct Witness {
  Ensemble ensemble;
  // P^Q(ensemble, M) − P^Q(ensemble, N) > 0.
  double violation;
};

struct WitnessSearchOptions {
  size_t restarts = 8;
  uint64_t seed = 1;
  size_t iterations = 200;
  // Prior given to the states a witness does not use.
  double filler_prior = 1e-3;
  // A witness must separate the two errors by more than this.
  double min_violation = 1e-7;
};

// Looks for an exclusion game on which N beats M, i.e. evidence that N is
// not simulable by M. The search maximizes the concave lower bound
//
//   f(ρ̃) = Σ_a min_x Tr(M_a ρ̃_x) − Σ_x Tr(N_x ρ̃_x),   ρ̃_x = p(x) ρ_x,
//
// of the violation with Frank-Wolfe steps. At the current ensemble the
// games-module optimal assignment p fixes Δ_x(p), and the ascent vertex is the
// point-mass ensemble on the x* whose Δ_x* has the largest positive
// eigenvalue, with ρ_x* its eigenprojector. Starts: the optimal exclusion
// game of N, point masses from random maps, and random ensembles.
//
// Best effort: nullopt does not certify simulability. Throws
// Error(InvalidState) if N is simulable by M.
std::optional<Witness> find_violating_ensemble(const Povm &m, const Povm &n,
                                               const WitnessSearchOptions &options = {},
                                               const Tolerances &tol = {});

struct AuditReport {
  size_t samples = 0;
  // Ensembles with P^Q(E, M) > P^Q(E, N) + slack.
  size_t violations = 0;
  // max_E P^Q(E, M) − P^Q(E, N).
  double max_gap = 0.0;
};

// Compares P^Q(E, M) and P^Q(E, N) on random ensembles; every sample uses its
// own derived seed so the result does not depend on `jobs`.
AuditReport monotone_audit(const Povm &m, const Povm &n, size_t samples, uint64_t seed, double slack = 1e-9,
                           size_t jobs = 1);

}  // namespace xkit
