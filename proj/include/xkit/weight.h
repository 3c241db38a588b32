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

#include <vector>

#include "xkit/objects.h"
#include "xkit/tolerances.h"

namespace xkit {

// Weight of informativeness
//
//   WoI(M) = min { w : M_a = w·N_a + (1 − w)·q(a)·𝟙 },
//
// the smallest weight of a resourceful POVM N that, mixed with an
// uninformative one, reproduces M. Writing q̃(a) = (1 − w)q(a) turns this into
// the SDP
//
//   1 − WoI(M) = max Σ_a q̃(a)   s.t.  M_a − q̃(a)·𝟙 ⪰ 0,
//
// with dual
//
//   1 − WoI(M) = min Σ_a Tr(ρ_a M_a)   s.t.  ρ_a ⪰ 0, Tr ρ_a = 1.
//
// Both programs decouple across outcomes: each primal constraint only
// involves q̃(a), whose largest feasible value is λ_min(M_a), and each dual
// term is minimized by the projector onto a λ_min eigenvector. So neither
// needs a conic solver; everything below reduces to min_eig.

// 1 − Σ_a max(0, λ_min(M_a)), clamped to [0, 1].
double woi(const Povm &m);

struct PrimalSolution {
  // Objective translated back to a weight: 1 − Σ_a q̃(a).
  double woi;
  // Optimal q̃(a) = max(0, λ_min(M_a)).
  std::vector<double> weights;
};

// Solves the primal program and certifies that M_a − q̃(a)𝟙 ⪰ −psd_tol.
PrimalSolution woi_primal(const Povm &m, const Tolerances &tol = {});

// M_a = (1 − w*) q*(a) 𝟙 + w* N*_a.
struct WeightDecomposition {
  double w_star;
  std::vector<double> q_star;
  Povm n_star;

  // max_a ‖M_a − (1 − w*) q*(a) 𝟙 − w* N*_a‖_max.
  double residual(const Povm &m) const;
};

// When w* ≤ zero_weight_tol, q*(a) = Tr(M_a)/d and N* = M. When the free part
// has zero weight (w* = 1), q* is uniform.
WeightDecomposition woi_decomposition(const Povm &m, const Tolerances &tol = {});

struct DualStates {
  // ρ_a = |v_a⟩⟨v_a| with v_a a λ_min eigenvector of M_a.
  std::vector<HermitianOperator> states;
  // Σ_a Tr(ρ_a M_a).
  double value;
};

DualStates dual_optimal_states(const Povm &m);

}  // namespace xkit
