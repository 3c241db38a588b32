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

#include "xkit/simplex.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "xkit/error.h"

namespace xkit {

namespace {

constexpr double kZero = 1e-13;

// Tableau rows 0..m-1 are constraints, row m the objective. Column n_total is
// the right-hand side. The objective row stores reduced costs and −z.
class Tableau {
 public:
  Tableau(size_t rows, size_t cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)), basis_(rows), m_(rows), n_(cols) {}

  double &operator()(size_t i, size_t j) { return t_(i, j); }
  double rhs(size_t i) const { return t_(i, n_); }
  size_t rows() const { return m_; }
  size_t cols() const { return n_; }
  std::vector<size_t> &basis() { return basis_; }

  void pivot(size_t r, size_t c) {
    t_.row(r) /= t_(r, c);
    for (size_t i = 0; i <= m_; ++i) {
      if (i != r && t_(i, c) != 0.0) {
        t_.row(i) -= t_(i, c) * t_.row(r);
      }
    }
    // Round-off below kZero is noise; clearing it keeps degenerate vertices
    // exactly degenerate and the basis columns exactly unit.
    for (size_t i = 0; i <= m_; ++i) {
      for (size_t j = 0; j <= n_; ++j) {
        if (std::abs(t_(i, j)) < kZero) {
          t_(i, j) = 0.0;
        }
      }
      t_(i, c) = i == r ? 1.0 : 0.0;
    }
    basis_[r] = c;
  }

  // Entering column by Bland's rule; columns with allowed[j] false never enter.
  // Returns false when unbounded.
  bool optimize(const std::vector<bool> &allowed, const SimplexOptions &opt, size_t &pivots) {
    while (true) {
      size_t enter = n_;
      for (size_t j = 0; j < n_; ++j) {
        if (allowed[j] && t_(m_, j) < -opt.cost_tol) {
          enter = j;
          break;
        }
      }
      if (enter == n_) {
        return true;
      }
      // Two-pass ratio test: bound the step with rows relaxed by
      // feasibility_tol, then take the largest pivot within the bound.
      double bound = std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < m_; ++i) {
        double coef = t_(i, enter);
        if (coef > opt.pivot_tol) {
          bound = std::min(bound, (std::max(0.0, t_(i, n_)) + opt.feasibility_tol) / coef);
        }
      }
      if (!std::isfinite(bound)) {
        return false;
      }
      size_t leave = m_;
      for (size_t i = 0; i < m_; ++i) {
        double coef = t_(i, enter);
        if (coef > opt.pivot_tol && std::max(0.0, t_(i, n_)) / coef <= bound) {
          if (leave == m_ || coef > t_(leave, enter) ||
              (coef == t_(leave, enter) && basis_[i] < basis_[leave])) {
            leave = i;
          }
        }
      }
      if (++pivots > opt.max_pivots) {
        throw Error(ErrorKind::NumericalInstability,
                    "simplex exceeded " + std::to_string(opt.max_pivots) + " pivots");
      }
      pivot(leave, enter);
      for (size_t i = 0; i < m_; ++i) {
        if (t_(i, n_) < 0.0) {
          t_(i, n_) = 0.0;
        }
      }
    }
  }

  void remove_row(size_t r) {
    Eigen::MatrixXd next(t_.rows() - 1, t_.cols());
    next << t_.topRows(r), t_.bottomRows(t_.rows() - r - 1);
    t_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  void set_objective(const Eigen::VectorXd &cost) {
    t_.row(m_).setZero();
    for (size_t j = 0; j < static_cast<size_t>(cost.size()); ++j) {
      t_(m_, j) = cost(j);
    }
    for (size_t i = 0; i < m_; ++i) {
      double cb = basis_[i] < static_cast<size_t>(cost.size()) ? cost(basis_[i]) : 0.0;
      if (cb != 0.0) {
        t_.row(m_) -= cb * t_.row(i);
      }
    }
  }

  double objective_value() const { return -t_(m_, n_); }

 private:
  Eigen::MatrixXd t_;
  std::vector<size_t> basis_;
  size_t m_;
  size_t n_;
};

}  // namespace

LpResult solve_standard_form(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                             const SimplexOptions &options) {
  const size_t m = static_cast<size_t>(a.rows());
  const size_t n = static_cast<size_t>(a.cols());
  if (static_cast<size_t>(b.size()) != m || static_cast<size_t>(c.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "LP data has inconsistent shapes");
  }

  // Columns: n structural, then m artificials.
  Tableau tab(m, n + m);
  for (size_t i = 0; i < m; ++i) {
    double scale = std::max(a.row(static_cast<Eigen::Index>(i)).cwiseAbs().maxCoeff(), std::abs(b(i)));
    double sign = (b(i) < 0.0 ? -1.0 : 1.0) / (scale > 0.0 ? scale : 1.0);
    for (size_t j = 0; j < n; ++j) {
      tab(i, j) = sign * a(i, j);
    }
    tab(i, n + i) = 1.0;
    tab(i, n + m) = std::abs(sign * b(i));
    tab.basis()[i] = n + i;
  }

  double rhs_norm = 0.0;
  for (size_t i = 0; i < m; ++i) {
    rhs_norm += tab.rhs(i);
  }

  LpResult result;
  Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n + m);
  phase1_cost.tail(m).setOnes();
  tab.set_objective(phase1_cost);
  std::vector<bool> allowed(n + m, true);
  tab.optimize(allowed, options, result.pivots);

  result.infeasibility = tab.objective_value();
  if (result.infeasibility > options.feasibility_tol * std::max(1.0, rhs_norm)) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // linear combinations of the others.
  for (size_t r = 0; r < tab.rows();) {
    if (tab.basis()[r] < n) {
      ++r;
      continue;
    }
    size_t best = n;
    double best_abs = options.pivot_tol;
    for (size_t j = 0; j < n; ++j) {
      if (std::abs(tab(r, j)) > best_abs) {
        best_abs = std::abs(tab(r, j));
        best = j;
      }
    }
    if (best == n) {
      tab.remove_row(r);
      continue;
    }
    tab.pivot(r, best);
    ++result.pivots;
    ++r;
  }

  for (size_t j = n; j < n + m; ++j) {
    allowed[j] = false;
  }
  Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n + m);
  phase2_cost.head(n) = c;
  tab.set_objective(phase2_cost);
  if (!tab.optimize(allowed, options, result.pivots)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x = Eigen::VectorXd::Zero(n);
  for (size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < n) {
      result.x(tab.basis()[i]) = std::max(0.0, tab.rhs(i));
    }
  }
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace xkit
