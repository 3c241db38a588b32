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

#include "xkit/weight.h"

#include <algorithm>
#include <string>

#include "xkit/error.h"

namespace xkit {

double woi(const Povm &m) {
  double free_mass = 0.0;
  for (const auto &effect : m.effects()) {
    free_mass += std::max(0.0, lambda_min(effect));
  }
  return std::clamp(1.0 - free_mass, 0.0, 1.0);
}

PrimalSolution woi_primal(const Povm &m, const Tolerances &tol) {
  PrimalSolution out;
  out.weights.reserve(m.outcomes());
  double objective = 0.0;
  const auto id = HermitianOperator::identity(m.dim());
  for (size_t a = 0; a < m.outcomes(); ++a) {
    double qa = std::max(0.0, min_eig(m[a]).value);
    if (!is_psd(m[a] - qa * id, tol.psd_tol)) {
      throw Error(ErrorKind::NumericalInstability,
                  "primal weight for outcome " + std::to_string(a) + " is infeasible", a);
    }
    out.weights.push_back(qa);
    objective += qa;
  }
  out.woi = std::clamp(1.0 - objective, 0.0, 1.0);
  return out;
}

double WeightDecomposition::residual(const Povm &m) const {
  const auto id = HermitianOperator::identity(m.dim());
  double worst = 0.0;
  for (size_t a = 0; a < m.outcomes(); ++a) {
    auto rebuilt = (1.0 - w_star) * q_star[a] * id + w_star * n_star[a];
    worst = std::max(worst, max_abs(m[a].matrix() - rebuilt.matrix()));
  }
  return worst;
}

WeightDecomposition woi_decomposition(const Povm &m, const Tolerances &tol) {
  PrimalSolution primal = woi_primal(m, tol);
  const double w = primal.woi;
  const size_t o = m.outcomes();
  const double d = static_cast<double>(m.dim());

  if (w <= tol.zero_weight_tol) {
    std::vector<double> q;
    q.reserve(o);
    for (const auto &effect : m.effects()) {
      q.push_back(effect.trace() / d);
    }
    return {w, std::move(q), m};
  }

  std::vector<double> q(o, 1.0 / static_cast<double>(o));
  if (w < 1.0) {
    for (size_t a = 0; a < o; ++a) {
      q[a] = primal.weights[a] / (1.0 - w);
    }
  }
  const auto id = HermitianOperator::identity(m.dim());
  std::vector<HermitianOperator> resource;
  resource.reserve(o);
  for (size_t a = 0; a < o; ++a) {
    resource.push_back((m[a] - primal.weights[a] * id) * (1.0 / w));
  }
  return {w, std::move(q), Povm::validate(std::move(resource), tol)};
}

DualStates dual_optimal_states(const Povm &m) {
  DualStates out;
  out.states.reserve(m.outcomes());
  out.value = 0.0;
  for (const auto &effect : m.effects()) {
    MinEigenpair pair = min_eig(effect);
    auto rho = HermitianOperator::projector(pair.vector);
    out.value += trace_product(rho, effect);
    out.states.push_back(std::move(rho));
  }
  return out;
}

}  // namespace xkit
