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

#include <optional>
#include <vector>

#include "xkit/objects.h"

namespace xkit {

// Minimal error of a player without an informative measurement: exclude the
// least likely state, P^C = min_x p(x).
double classical_error(const Ensemble &e);

struct GameReport {
  double p_err_classical;
  double p_err_quantum;
  // g(a): the state excluded when outcome a is observed.
  std::vector<size_t> optimal_assignment;
  // P^Q / P^C, unset when P^C = 0.
  std::optional<double> ratio;

  // Deterministic post-processing q(x|a) = δ_{x, g(a)} over k states.
  StochasticMap strategy(size_t k) const;
};

// P^Q(E, M) = min over N ⪯ M of Σ_x p(x) Tr(N_x ρ_x).
//
// For fixed M the objective Σ_x Σ_a q(x|a) p(x) Tr(M_a ρ_x) is linear in q
// and the constraints are one simplex per outcome a, so a vertex is optimal:
// every outcome independently names the x minimizing p(x) Tr(M_a ρ_x). Ties
// go to the smallest x. Throws Error(DimensionMismatch).
GameReport quantum_error(const Ensemble &e, const Povm &m);

// P^Q / P^C. Throws Error(DegenerateGame) when min_x p(x) = 0.
double advantage_ratio(const Ensemble &e, const Povm &m);

// Uniform ensemble of the dual optimal states of M. Its advantage ratio
// equals 1 − WoI(M).
Ensemble optimal_exclusion_game(const Povm &m);

}  // namespace xkit
