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

#include <Eigen/Dense>

namespace xkit {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  // Primal point; empty unless status is Optimal.
  Eigen::VectorXd x;
  double objective = 0.0;
  // Phase-one optimum: the smallest total constraint violation reachable
  // with x ≥ 0.
  double infeasibility = 0.0;
  size_t pivots = 0;
};

struct SimplexOptions {
  size_t max_pivots = 100000;
  // Entries smaller than this are never used as pivots.
  double pivot_tol = 1e-11;
  // Reduced costs above −cost_tol count as nonnegative.
  double cost_tol = 1e-12;
  // Phase one is feasible when its optimum is at most
  // feasibility_tol · max(1, ‖b‖₁).
  double feasibility_tol = 1e-9;
};

// Dense two-phase tableau simplex for
//
//   minimize cᵀx  subject to  A x = b,  x ≥ 0.
//
// The entering column follows Bland's rule; the leaving row comes from a
// two-pass (Harris) ratio test relaxed by feasibility_tol. Rows are scaled to
// unit max norm. Phase one adds one artificial per row (after flipping rows so
// b ≥ 0) and
// minimizes their sum; phase two drives leftover artificials out of the basis,
// drops redundant rows, and optimizes c. Throws Error(NumericalInstability)
// when the pivot cap is exceeded.
LpResult solve_standard_form(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                             const SimplexOptions &options = {});

}  // namespace xkit
