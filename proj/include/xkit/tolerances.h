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

namespace xkit {

// Numerical tolerance tiers. The CLI exposes herm_tol, psd_tol and feas_tol.
struct Tolerances {
  // ‖H − H†‖_max accepted for a Hermitian operator.
  double herm_tol = 1e-9;
  // Smallest eigenvalue accepted as nonnegative.
  double psd_tol = 1e-7;
  // ‖Σ_a M_a − 𝟙‖_max accepted for a POVM.
  double completeness_tol = 1e-7;
  // |Tr(ρ) − 1| accepted for a density matrix.
  double trace_tol = 1e-8;
  // Normalization slack for probability vectors and stochastic rows.
  double prob_tol = 1e-10;
  // Reconstruction slack for simulation maps recovered by the LP.
  double feas_tol = 1e-6;
  // Eigenvalues closer than this are treated as degenerate.
  double degeneracy_tol = 1e-9;
  // WoI at or below this counts as zero (faithfulness / decomposition).
  double zero_weight_tol = 1e-9;
  // Error ratios at or below this are reported as +inf information.
  double infinity_cutoff = 1e-9;
};

}  // namespace xkit
