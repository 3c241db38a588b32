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

#include "xkit/simulability.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "xkit/error.h"
#include "xkit/games.h"
#include "xkit/parallel.h"
#include "xkit/weight.h"

namespace xkit {

std::vector<HermitianOperator> gell_mann_basis(size_t dim) {
  std::vector<HermitianOperator> basis;
  basis.reserve(dim * dim);
  basis.push_back(HermitianOperator::identity(dim));
  const auto n = static_cast<Eigen::Index>(dim);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.push_back(HermitianOperator::from_matrix(std::move(sym)));
      ComplexMatrix anti = ComplexMatrix::Zero(n, n);
      anti(j, k) = Complex(0.0, -1.0);
      anti(k, j) = Complex(0.0, 1.0);
      basis.push_back(HermitianOperator::from_matrix(std::move(anti)));
    }
  }
  for (Eigen::Index l = 1; l < n; ++l) {
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < l; ++j) {
      diag(j, j) = scale;
    }
    diag(l, l) = -scale * static_cast<double>(l);
    basis.push_back(HermitianOperator::from_matrix(std::move(diag)));
  }
  return basis;
}

SimulabilityResult check_simulable(const Povm &m, const Povm &n, const Tolerances &tol, const SimplexOptions &lp) {
  if (m.dim() != n.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "simulability needs POVMs on the same dimension");
  }
  const size_t o = m.outcomes();
  const size_t k = n.outcomes();
  const std::vector<HermitianOperator> basis = gell_mann_basis(m.dim());
  const size_t nb = basis.size();

  // Variable (a, x) lives at column a·k + x.
  Eigen::MatrixXd a_eq = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(o + k * nb), static_cast<Eigen::Index>(o * k));
  Eigen::VectorXd b_eq = Eigen::VectorXd::Zero(a_eq.rows());
  for (size_t a = 0; a < o; ++a) {
    for (size_t x = 0; x < k; ++x) {
      a_eq(a, a * k + x) = 1.0;
    }
    b_eq(a) = 1.0;
  }
  std::vector<std::vector<double>> m_coords(o, std::vector<double>(nb));
  for (size_t a = 0; a < o; ++a) {
    for (size_t j = 0; j < nb; ++j) {
      m_coords[a][j] = trace_product(basis[j], m[a]);
    }
  }
  for (size_t x = 0; x < k; ++x) {
    for (size_t j = 0; j < nb; ++j) {
      const size_t row = o + x * nb + j;
      for (size_t a = 0; a < o; ++a) {
        a_eq(row, a * k + x) = m_coords[a][j];
      }
      b_eq(row) = trace_product(basis[j], n[x]);
    }
  }

  LpResult sol = solve_standard_form(a_eq, b_eq, Eigen::VectorXd::Zero(a_eq.cols()), lp);
  SimulabilityResult result{NotSimulable{}, sol.infeasibility, sol.pivots};
  if (sol.status != LpStatus::Optimal) {
    return result;
  }

  Eigen::MatrixXd table(o, k);
  for (size_t a = 0; a < o; ++a) {
    for (size_t x = 0; x < k; ++x) {
      table(a, x) = sol.x(a * k + x);
    }
    table.row(a) /= table.row(a).sum();
  }
  StochasticMap map = StochasticMap::validate(std::move(table), tol);
  DeltaOperators deltas = delta_operators(m, n, map);
  double residual = 0.0;
  for (const auto &d : deltas.deltas) {
    residual = std::max(residual, max_abs(d.matrix()));
  }
  if (residual > tol.feas_tol) {
    throw Error(ErrorKind::NumericalInstability,
                "LP reported a simulation map that misses the target by " + std::to_string(residual));
  }
  result.verdict = Simulable{std::move(map), residual};
  return result;
}

HermitianOperator DeltaOperators::sum() const {
  HermitianOperator total = HermitianOperator::zero(deltas.front().dim());
  for (const auto &d : deltas) {
    total += d;
  }
  return total;
}

double DeltaOperators::sum_residual() const {
  return max_abs(sum().matrix());
}

DeltaOperators delta_operators(const Povm &m, const Povm &n, const StochasticMap &p) {
  if (m.dim() != n.dim() || p.rows() != m.outcomes() || p.cols() != n.outcomes()) {
    throw Error(ErrorKind::DimensionMismatch, "delta_operators: shapes of M, N and p do not match");
  }
  DeltaOperators out;
  out.deltas.reserve(n.outcomes());
  for (size_t x = 0; x < n.outcomes(); ++x) {
    HermitianOperator dx = HermitianOperator::zero(m.dim()) - n[x];
    for (size_t a = 0; a < m.outcomes(); ++a) {
      if (p(a, x) != 0.0) {
        dx += p(a, x) * m[a];
      }
    }
    out.deltas.push_back(std::move(dx));
  }
  return out;
}

namespace {

// Unnormalized ensemble ρ̃_x = p(x) ρ_x, Σ_x Tr ρ̃_x = 1.
using Weighted = std::vector<HermitianOperator>;

struct Vertex {
  size_t slot;
  HermitianOperator projector;
  double eigenvalue;
};

// Point mass on the slot whose Δ_x has the largest eigenvalue.
Vertex ascent_vertex(const DeltaOperators &deltas) {
  Vertex best{0, HermitianOperator{}, -std::numeric_limits<double>::infinity()};
  for (size_t x = 0; x < deltas.deltas.size(); ++x) {
    EigenDecomposition e = eig_hermitian(deltas.deltas[x]);
    const Eigen::Index top = e.eigenvalues.size() - 1;
    if (e.eigenvalues(top) > best.eigenvalue) {
      best = {x, HermitianOperator::projector(e.eigenvectors.col(top)), e.eigenvalues(top)};
    }
  }
  return best;
}

Weighted point_mass(size_t k, size_t dim, const Vertex &v) {
  Weighted w(k, HermitianOperator::zero(dim));
  w[v.slot] = v.projector;
  return w;
}

// Tr(M_a ρ̃_x) for all a, x, and Tr(N_x ρ̃_x).
struct Overlaps {
  Eigen::MatrixXd m;
  Eigen::VectorXd n;
};

Overlaps overlaps(const Povm &m, const Povm &n, const Weighted &w) {
  Overlaps out{Eigen::MatrixXd(m.outcomes(), w.size()), Eigen::VectorXd(w.size())};
  for (size_t x = 0; x < w.size(); ++x) {
    for (size_t a = 0; a < m.outcomes(); ++a) {
      out.m(a, x) = trace_product(m[a], w[x]);
    }
    out.n(x) = trace_product(n[x], w[x]);
  }
  return out;
}

double lower_bound(const Overlaps &ov) {
  return ov.m.rowwise().minCoeff().sum() - ov.n.sum();
}

std::vector<size_t> assignment(const Overlaps &ov) {
  std::vector<size_t> g(static_cast<size_t>(ov.m.rows()));
  for (Eigen::Index a = 0; a < ov.m.rows(); ++a) {
    Eigen::Index best = 0;
    ov.m.row(a).minCoeff(&best);
    g[static_cast<size_t>(a)] = static_cast<size_t>(best);
  }
  return g;
}

// Maximizes the concave lower bound along the segment toward `target`.
double line_search(const Overlaps &from, const Overlaps &to) {
  auto value = [&](double gamma) {
    Overlaps mixed{(1.0 - gamma) * from.m + gamma * to.m, (1.0 - gamma) * from.n + gamma * to.n};
    return lower_bound(mixed);
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (value(m1) < value(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  double gamma = 0.5 * (lo + hi);
  // The segment ends are candidates too; the objective is only piecewise linear.
  double best = value(gamma);
  if (value(1.0) > best) {
    gamma = 1.0;
    best = value(1.0);
  }
  if (value(0.0) >= best) {
    gamma = 0.0;
  }
  return gamma;
}

Weighted frank_wolfe(const Povm &m, const Povm &n, Weighted w, size_t iterations) {
  const size_t k = n.outcomes();
  for (size_t it = 0; it < iterations; ++it) {
    Overlaps ov = overlaps(m, n, w);
    StochasticMap p = StochasticMap::deterministic(assignment(ov), k);
    Vertex v = ascent_vertex(delta_operators(m, n, p));
    double gap = v.eigenvalue - lower_bound(ov);
    if (gap <= 1e-13) {
      break;
    }
    Weighted target = point_mass(k, m.dim(), v);
    double gamma = line_search(ov, overlaps(m, n, target));
    if (gamma == 0.0) {
      break;
    }
    for (size_t x = 0; x < k; ++x) {
      w[x] = (1.0 - gamma) * w[x] + gamma * target[x];
    }
  }
  return w;
}

Ensemble to_ensemble(const Weighted &w, double filler_prior) {
  const size_t k = w.size();
  const size_t d = w.front().dim();
  std::vector<HermitianOperator> states;
  std::vector<double> priors;
  double total = 0.0;
  for (size_t x = 0; x < k; ++x) {
    double p = w[x].trace();
    if (p > 1e-14) {
      states.push_back(w[x] * (1.0 / p));
    } else {
      p = 0.0;
      states.push_back(HermitianOperator::identity(d) * (1.0 / static_cast<double>(d)));
    }
    p = std::max(p, filler_prior);
    priors.push_back(p);
    total += p;
  }
  for (auto &p : priors) {
    p /= total;
  }
  return Ensemble::validate(std::move(states), std::move(priors));
}

double violation(const Ensemble &e, const Povm &m, const Povm &n) {
  return quantum_error(e, m).p_err_quantum - quantum_error(e, n).p_err_quantum;
}

}  // namespace

std::optional<Witness> find_violating_ensemble(const Povm &m, const Povm &n, const WitnessSearchOptions &options,
                                               const Tolerances &tol) {
  if (check_simulable(m, n, tol).simulable()) {
    throw Error(ErrorKind::InvalidState, "find_violating_ensemble: target is simulable, no violating game exists");
  }
  const size_t k = n.outcomes();
  const size_t d = m.dim();

  std::optional<Witness> best;
  auto consider = [&](const Weighted &w) {
    for (double filler : {0.0, options.filler_prior}) {
      Ensemble e = to_ensemble(w, filler);
      double v = violation(e, m, n);
      if (v > options.min_violation && (!best || v > best->violation)) {
        best = Witness{std::move(e), v};
      }
    }
  };

  const size_t starts = std::max<size_t>(1, options.restarts);
  for (size_t s = 0; s < starts; ++s) {
    const uint64_t seed = derive_seed(options.seed, s);
    Weighted start;
    if (s == 0) {
      Ensemble game = optimal_exclusion_game(n);
      for (const auto &rho : game.states()) {
        start.push_back(rho * (1.0 / static_cast<double>(k)));
      }
    } else if (s % 2 == 1) {
      StochasticMap p = random_stochastic_map(m.outcomes(), k, seed);
      start = point_mass(k, d, ascent_vertex(delta_operators(m, n, p)));
    } else {
      Ensemble e = random_ensemble(d, k, seed);
      for (size_t x = 0; x < k; ++x) {
        start.push_back(e.prior(x) * e.state(x));
      }
    }
    consider(start);
    consider(frank_wolfe(m, n, std::move(start), options.iterations));
  }
  return best;
}

AuditReport monotone_audit(const Povm &m, const Povm &n, size_t samples, uint64_t seed, double slack, size_t jobs) {
  if (m.dim() != n.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "monotone_audit needs POVMs on the same dimension");
  }
  const size_t k_max = std::max(m.outcomes(), n.outcomes()) + 1;
  std::vector<double> gaps(samples);
  parallel_for(samples, jobs, [&](size_t i) {
    const uint64_t s = derive_seed(seed, i);
    Rng rng(s);
    size_t k = std::uniform_int_distribution<size_t>(2, k_max)(rng);
    Ensemble e = random_ensemble(m.dim(), k, derive_seed(s, 1));
    gaps[i] = violation(e, m, n);
  });
  AuditReport report;
  report.samples = samples;
  report.max_gap = samples == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  for (double g : gaps) {
    report.max_gap = std::max(report.max_gap, g);
    if (g > slack) {
      ++report.violations;
    }
  }
  return report;
}

}  // namespace xkit
