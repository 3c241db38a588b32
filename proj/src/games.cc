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

#include "xkit/games.h"

#include <algorithm>
#include <limits>

#include "xkit/error.h"
#include "xkit/weight.h"

namespace xkit {

double classical_error(const Ensemble &e) {
  return *std::min_element(e.priors().begin(), e.priors().end());
}

StochasticMap GameReport::strategy(size_t k) const {
  return StochasticMap::deterministic(optimal_assignment, k);
}

GameReport quantum_error(const Ensemble &e, const Povm &m) {
  if (e.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble and POVM act on different dimensions");
  }
  GameReport report;
  report.p_err_classical = classical_error(e);
  report.p_err_quantum = 0.0;
  report.optimal_assignment.reserve(m.outcomes());
  for (size_t a = 0; a < m.outcomes(); ++a) {
    size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (size_t x = 0; x < e.size(); ++x) {
      double v = e.prior(x) * trace_product(m[a], e.state(x));
      if (v < best_value) {
        best_value = v;
        best = x;
      }
    }
    report.optimal_assignment.push_back(best);
    report.p_err_quantum += best_value;
  }
  if (report.p_err_classical > 0.0) {
    report.ratio = report.p_err_quantum / report.p_err_classical;
  }
  return report;
}

double advantage_ratio(const Ensemble &e, const Povm &m) {
  GameReport report = quantum_error(e, m);
  if (!report.ratio) {
    throw Error(ErrorKind::DegenerateGame, "advantage ratio undefined: some state has zero prior");
  }
  return *report.ratio;
}

Ensemble optimal_exclusion_game(const Povm &m) {
  DualStates dual = dual_optimal_states(m);
  const size_t o = m.outcomes();
  return Ensemble::validate(std::move(dual.states), std::vector<double>(o, 1.0 / static_cast<double>(o)));
}

}  // namespace xkit
