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

#include "xkit/objects.h"

#include <cmath>
#include <string>

#include "xkit/error.h"

namespace xkit {

StochasticMap StochasticMap::validate(Eigen::MatrixXd table, const Tolerances &tol) {
  if (table.rows() == 0 || table.cols() == 0) {
    throw Error(ErrorKind::InvalidDistribution, "stochastic map must have at least one row and column");
  }
  for (Eigen::Index a = 0; a < table.rows(); ++a) {
    if (table.row(a).minCoeff() < 0.0) {
      throw Error(ErrorKind::InvalidDistribution,
                  "stochastic map row " + std::to_string(a) + " has a negative entry", static_cast<size_t>(a));
    }
    double s = table.row(a).sum();
    if (std::abs(s - 1.0) > tol.prob_tol) {
      throw Error(ErrorKind::InvalidDistribution,
                  "stochastic map row " + std::to_string(a) + " sums to " + std::to_string(s),
                  static_cast<size_t>(a));
    }
  }
  return StochasticMap(std::move(table));
}

StochasticMap StochasticMap::identity(size_t n) {
  return StochasticMap(Eigen::MatrixXd::Identity(n, n));
}

StochasticMap StochasticMap::deterministic(const std::vector<size_t> &assignment, size_t cols) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(assignment.size(), cols);
  for (size_t a = 0; a < assignment.size(); ++a) {
    if (assignment[a] >= cols) {
      throw Error(ErrorKind::InvalidArgument, "assignment target out of range", a);
    }
    t(a, assignment[a]) = 1.0;
  }
  return validate(std::move(t));
}

StochasticMap StochasticMap::constant(size_t rows, const std::vector<double> &dist) {
  Eigen::MatrixXd t(rows, dist.size());
  for (size_t a = 0; a < rows; ++a) {
    for (size_t x = 0; x < dist.size(); ++x) {
      t(a, x) = dist[x];
    }
  }
  return validate(std::move(t));
}

StochasticMap StochasticMap::then(const StochasticMap &next) const {
  if (cols() != next.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot compose stochastic maps with mismatched alphabets");
  }
  return StochasticMap(table_ * next.table_);
}

Povm Povm::validate(std::vector<HermitianOperator> effects, const Tolerances &tol) {
  if (effects.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a POVM needs at least one effect");
  }
  const size_t d = effects.front().dim();
  HermitianOperator total = HermitianOperator::zero(d);
  for (size_t a = 0; a < effects.size(); ++a) {
    if (effects[a].dim() != d) {
      throw Error(ErrorKind::DimensionMismatch, "effect " + std::to_string(a) + " has the wrong dimension", a);
    }
    if (!is_psd(effects[a], tol.psd_tol)) {
      throw Error(ErrorKind::NotPsd, "effect " + std::to_string(a) + " is not positive semidefinite", a);
    }
    total += effects[a];
  }
  double dev = max_abs(total.matrix() - ComplexMatrix::Identity(d, d));
  if (dev > tol.completeness_tol) {
    throw Error(ErrorKind::CompletenessViolation, "effects sum to identity only within " + std::to_string(dev));
  }
  return Povm(std::move(effects));
}

Povm validate_povm(const std::vector<ComplexMatrix> &candidate, const Tolerances &tol) {
  std::vector<HermitianOperator> effects;
  effects.reserve(candidate.size());
  for (size_t a = 0; a < candidate.size(); ++a) {
    if (a > 0 && (candidate[a].rows() != candidate[0].rows() || candidate[a].cols() != candidate[0].cols())) {
      throw Error(ErrorKind::DimensionMismatch, "effect " + std::to_string(a) + " has the wrong dimension", a);
    }
    try {
      effects.push_back(HermitianOperator::from_matrix(candidate[a], tol.herm_tol));
    } catch (const Error &e) {
      throw Error(e.kind(), "effect " + std::to_string(a) + ": " + e.what(), a);
    }
  }
  return Povm::validate(std::move(effects), tol);
}

Ensemble Ensemble::validate(std::vector<HermitianOperator> states, std::vector<double> priors,
                            const Tolerances &tol) {
  if (states.empty()) {
    throw Error(ErrorKind::InvalidArgument, "an ensemble needs at least one state");
  }
  if (states.size() != priors.size()) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble has " + std::to_string(states.size()) + " states but " +
                                                  std::to_string(priors.size()) + " priors");
  }
  const size_t d = states.front().dim();
  double total = 0.0;
  for (size_t x = 0; x < states.size(); ++x) {
    if (states[x].dim() != d) {
      throw Error(ErrorKind::DimensionMismatch, "state " + std::to_string(x) + " has the wrong dimension", x);
    }
    if (!is_psd(states[x], tol.psd_tol)) {
      throw Error(ErrorKind::NotPsd, "state " + std::to_string(x) + " is not positive semidefinite", x);
    }
    if (std::abs(states[x].trace() - 1.0) > tol.trace_tol) {
      throw Error(ErrorKind::InvalidDistribution, "state " + std::to_string(x) + " does not have unit trace", x);
    }
    if (!(priors[x] >= 0.0)) {
      throw Error(ErrorKind::InvalidDistribution, "prior " + std::to_string(x) + " is negative", x);
    }
    total += priors[x];
  }
  if (std::abs(total - 1.0) > tol.prob_tol) {
    throw Error(ErrorKind::InvalidDistribution, "priors sum to " + std::to_string(total));
  }
  return Ensemble(std::move(states), std::move(priors));
}

std::optional<std::vector<double>> is_uninformative(const Povm &m, double tol) {
  const size_t d = m.dim();
  std::vector<double> q;
  q.reserve(m.outcomes());
  for (const auto &effect : m.effects()) {
    double qa = effect.trace() / static_cast<double>(d);
    if (max_abs(effect.matrix() - qa * ComplexMatrix::Identity(d, d)) > tol) {
      return std::nullopt;
    }
    q.push_back(qa);
  }
  return q;
}

Povm apply_postprocessing(const Povm &m, const StochasticMap &q, const Tolerances &tol) {
  if (q.rows() != m.outcomes()) {
    throw Error(ErrorKind::DimensionMismatch, "post-processing has " + std::to_string(q.rows()) +
                                                  " rows but the POVM has " + std::to_string(m.outcomes()) +
                                                  " outcomes");
  }
  std::vector<HermitianOperator> out(q.cols(), HermitianOperator::zero(m.dim()));
  for (size_t x = 0; x < q.cols(); ++x) {
    for (size_t a = 0; a < m.outcomes(); ++a) {
      if (q(a, x) != 0.0) {
        out[x] += q(a, x) * m[a];
      }
    }
  }
  return Povm::validate(std::move(out), tol);
}

Povm mix(const Povm &m1, const Povm &m2, double p, const Tolerances &tol) {
  if (m1.dim() != m2.dim() || m1.outcomes() != m2.outcomes()) {
    throw Error(ErrorKind::DimensionMismatch, "mixed POVMs must share dimension and outcome count");
  }
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorKind::InvalidArgument, "mixing weight must lie in [0, 1]");
  }
  std::vector<HermitianOperator> out;
  out.reserve(m1.outcomes());
  for (size_t a = 0; a < m1.outcomes(); ++a) {
    out.push_back(p * m1[a] + (1.0 - p) * m2[a]);
  }
  return Povm::validate(std::move(out), tol);
}

}  // namespace xkit
