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

#include "xkit/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "xkit/error.h"
#include "xkit/games.h"
#include "xkit/information.h"
#include "xkit/parallel.h"
#include "xkit/simulability.h"
#include "xkit/weight.h"

namespace xkit {

VerifyTarget parse_verify_target(std::string_view name) {
  if (name == "lemma") return VerifyTarget::Lemma;
  if (name == "result1") return VerifyTarget::Result1;
  if (name == "result2") return VerifyTarget::Result2;
  if (name == "result3") return VerifyTarget::Result3;
  if (name == "all") return VerifyTarget::All;
  throw Error(ErrorKind::InvalidArgument, "unknown verify target \"" + std::string(name) + "\"");
}

std::string_view to_string(VerifyTarget target) {
  switch (target) {
    case VerifyTarget::Lemma:
      return "lemma";
    case VerifyTarget::Result1:
      return "result1";
    case VerifyTarget::Result2:
      return "result2";
    case VerifyTarget::Result3:
      return "result3";
    case VerifyTarget::All:
      return "all";
  }
  return "unknown";
}

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto &p) { return p.ok(); });
}

namespace {

struct Check {
  size_t property;
  double margin;
};

struct Instance {
  size_t dim;
  size_t outcomes;
  uint64_t seed;

  uint64_t stream(uint64_t i) const { return derive_seed(seed, i); }
};

using TrialFn = std::function<std::vector<Check>(const Instance &)>;

struct Suite {
  std::vector<std::string> names;
  TrialFn trial;
  // Property index → fraction of checks that must pass (default all).
  std::vector<std::pair<size_t, double>> quotas;
};

void run_suite(const Suite &suite, const VerifyConfig &config, uint64_t suite_salt, VerifyReport &report) {
  std::vector<std::vector<Check>> per_trial(config.trials);
  const size_t nd = config.dims.size();
  const size_t no = config.outcomes.size();
  const uint64_t base = derive_seed(config.seed, suite_salt);
  parallel_for(config.trials, config.jobs, [&](size_t t) {
    Instance inst{config.dims[t % nd], config.outcomes[(t / nd) % no], derive_seed(base, t)};
    per_trial[t] = suite.trial(inst);
  });

  std::vector<PropertyOutcome> outcomes(suite.names.size());
  for (size_t p = 0; p < outcomes.size(); ++p) {
    outcomes[p].name = suite.names[p];
    outcomes[p].worst_margin = std::numeric_limits<double>::infinity();
  }
  for (const auto &checks : per_trial) {
    for (const Check &c : checks) {
      auto &o = outcomes[c.property];
      ++o.total;
      if (c.margin >= 0.0) {
        ++o.passed;
      }
      o.worst_margin = std::min(o.worst_margin, c.margin);
    }
  }
  for (auto &o : outcomes) {
    o.required = o.total;
  }
  for (auto [p, fraction] : suite.quotas) {
    outcomes[p].required = static_cast<size_t>(std::ceil(fraction * static_cast<double>(outcomes[p].total)));
  }
  report.properties.insert(report.properties.end(), outcomes.begin(), outcomes.end());
}

Suite lemma_suite(const VerifyConfig &config) {
  enum { kFaithful, kConvex, kMonotone, kBounds, kProjective, kPrimal, kDuality, kDecomposition };
  Suite s;
  s.names = {"faithfulness",         "convexity",           "monotonicity",       "bounds",
             "projective_maximal",   "closed_form_vs_primal", "strong_duality",   "decomposition_residual"};
  s.trial = [config](const Instance &in) {
    std::vector<Check> out;
    const auto &tol = config.tol;
    auto faithful = [&](const Povm &m) {
      bool zero = woi(m) <= 1e-7;
      bool uninformative = is_uninformative(m, 1e-6).has_value();
      return zero == uninformative ? 0.0 : -1.0;
    };
    Povm uninformative = random_uninformative_povm(in.dim, in.outcomes, in.stream(0));
    Povm m1 = random_povm(in.dim, in.outcomes, in.stream(1));
    Povm m2 = random_povm(in.dim, in.outcomes, in.stream(2));
    out.push_back({kFaithful, faithful(uninformative)});
    out.push_back({kFaithful, faithful(m1)});

    double w1 = woi(m1);
    double w2 = woi(m2);
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double wm = woi(mix(m1, m2, p, tol));
      out.push_back({kConvex, p * w1 + (1.0 - p) * w2 + 1e-8 - wm});
      out.push_back({kBounds, std::min(wm, 1.0 - wm)});
    }

    Rng rng(in.stream(3));
    size_t k = config.outcomes[std::uniform_int_distribution<size_t>(0, config.outcomes.size() - 1)(rng)];
    Povm n = apply_postprocessing(m1, random_stochastic_map(in.outcomes, k, in.stream(4)), tol);
    out.push_back({kMonotone, w1 + 1e-8 - woi(n)});
    for (double w : {w1, w2, woi(n), woi(uninformative)}) {
      out.push_back({kBounds, std::min(w, 1.0 - w)});
    }

    Povm projective = random_projective_povm(in.dim, in.stream(5));
    out.push_back({kProjective, 1e-9 - std::abs(woi(projective) - 1.0)});

    for (const Povm *m : {&m1, &m2, &uninformative, &projective}) {
      PrimalSolution primal = woi_primal(*m, tol);
      DualStates dual = dual_optimal_states(*m);
      out.push_back({kPrimal, 1e-10 - std::abs(woi(*m) - primal.woi)});
      out.push_back({kDuality, 1e-9 - std::abs(primal.woi - (1.0 - dual.value))});
      out.push_back({kDecomposition, 1e-7 - woi_decomposition(*m, tol).residual(*m)});
    }
    return out;
  };
  return s;
}

Suite result1_suite(const VerifyConfig &config) {
  enum { kLowerBound, kEquality };
  Suite s;
  s.names = {"advantage_lower_bound", "optimal_game_equality"};
  s.trial = [config](const Instance &in) {
    std::vector<Check> out;
    Povm m = random_povm(in.dim, in.outcomes, in.stream(0));
    double free_weight = 1.0 - woi(m);
    double worst = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < config.ensembles_per_povm; ++i) {
      uint64_t seed = in.stream(100 + i);
      Rng rng(seed);
      size_t k = std::uniform_int_distribution<size_t>(2, kMaxVerifyOutcomes)(rng);
      Ensemble e = random_ensemble(in.dim, k, derive_seed(seed, 1));
      worst = std::min(worst, advantage_ratio(e, m) - free_weight + 1e-7);
    }
    out.push_back({kLowerBound, worst});
    Ensemble game = optimal_exclusion_game(m);
    out.push_back({kEquality, 1e-7 - std::abs(advantage_ratio(game, m) - free_weight)});
    return out;
  };
  return s;
}

Suite result2_suite(const VerifyConfig &config) {
  enum { kDirect, kProjective, kLog };
  Suite s;
  s.names = {"direct_search_matches_formula", "projective_infinite", "log_ratio_identity"};
  s.trial = [config](const Instance &in) {
    std::vector<Check> out;
    const auto &tol = config.tol;
    Povm m = random_povm(in.dim, in.outcomes, in.stream(0));
    if (woi(m) < 1.0 - 1e-6) {
      ExtendedReal formula = excludible_information(m, tol);
      DirectSearchResult direct =
          excludible_information_direct(m, {config.search_trials, in.stream(1), 2}, tol);
      double gap = (direct.best.is_finite() && formula.is_finite())
                       ? std::abs(direct.best.value() - formula.value())
                       : std::numeric_limits<double>::infinity();
      out.push_back({kDirect, 1e-6 - gap});
    }
    Povm projective = random_projective_povm(in.dim, in.stream(2));
    bool both_inf = excludible_information(projective, tol).is_infinite() &&
                    excludible_information_direct(projective, {config.search_trials, in.stream(3), 2}, tol)
                        .best.is_infinite();
    out.push_back({kProjective, both_inf ? 0.0 : -1.0});

    Ensemble e = random_ensemble(in.dim, in.outcomes, in.stream(4));
    GameReport game = quantum_error(e, m);
    ExtendedReal info = mutual_exclusion_information(e, m, StochasticMap::identity(m.outcomes()), tol);
    double expected = std::log2(game.p_err_classical / game.p_err_quantum);
    out.push_back({kLog, info.is_finite() ? 1e-9 - std::abs(info.value() - expected) : -1.0});
    return out;
  };
  return s;
}

Suite result3_suite(const VerifyConfig &config) {
  enum { kSimulableVerdict, kAuditClean, kWitnessFound, kWitnessValid };
  Suite s;
  s.names = {"postprocessing_is_simulable", "monotone_audit_clean", "witness_found", "witness_valid"};
  s.quotas = {{kWitnessFound, 0.9}};
  s.trial = [config](const Instance &in) {
    std::vector<Check> out;
    const auto &tol = config.tol;
    Povm m = random_povm(in.dim, in.outcomes, in.stream(0));
    Rng rng(in.stream(1));
    size_t k = config.outcomes[std::uniform_int_distribution<size_t>(0, config.outcomes.size() - 1)(rng)];
    Povm coarse = apply_postprocessing(m, random_stochastic_map(in.outcomes, k, in.stream(2)), tol);
    SimulabilityResult verdict = check_simulable(m, coarse, tol);
    out.push_back({kSimulableVerdict, verdict.simulable() ? 0.0 : -1.0});
    AuditReport audit = monotone_audit(m, coarse, config.audit_samples, in.stream(3));
    out.push_back({kAuditClean, audit.violations == 0 ? 1e-9 - std::max(0.0, audit.max_gap) : -1.0});

    Povm other = random_povm(in.dim, k, in.stream(4));
    if (!check_simulable(m, other, tol).simulable()) {
      WitnessSearchOptions options;
      options.restarts = config.witness_restarts;
      options.seed = in.stream(5);
      auto witness = find_violating_ensemble(m, other, options, tol);
      out.push_back({kWitnessFound, witness ? witness->violation - 1e-7 : -1.0});
      if (witness) {
        double recomputed = quantum_error(witness->ensemble, m).p_err_quantum -
                            quantum_error(witness->ensemble, other).p_err_quantum;
        out.push_back({kWitnessValid, recomputed - witness->violation + 1e-12});
      }
    }
    return out;
  };
  return s;
}

PropertyOutcome z_versus_x_witness(const Tolerances &tol) {
  auto z = Povm::validate({HermitianOperator::diagonal({1.0, 0.0}), HermitianOperator::diagonal({0.0, 1.0})});
  ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
  ComplexMatrix minus = ComplexMatrix::Identity(2, 2) - plus;
  auto x = Povm::validate({HermitianOperator::from_matrix(plus), HermitianOperator::from_matrix(minus)});
  PropertyOutcome out{"z_x_witness_violation", 0, 0, 2, std::numeric_limits<double>::infinity()};
  for (auto [from, to] : {std::pair{&z, &x}, std::pair{&x, &z}}) {
    auto witness = find_violating_ensemble(*from, *to, {}, tol);
    double margin = witness ? witness->violation - 0.1 : -1.0;
    ++out.total;
    if (margin >= 0.0) {
      ++out.passed;
    }
    out.worst_margin = std::min(out.worst_margin, margin);
  }
  return out;
}

void check_config(const VerifyConfig &config) {
  if (config.trials == 0) {
    throw Error(ErrorKind::InvalidArgument, "verify needs at least one trial");
  }
  if (config.dims.empty() || config.outcomes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "verify needs at least one dimension and outcome count");
  }
  for (size_t d : config.dims) {
    if (d < 2 || d > kMaxVerifyDim) {
      throw Error(ErrorKind::InvalidArgument, "verify supports 2 <= d <= " + std::to_string(kMaxVerifyDim));
    }
  }
  for (size_t o : config.outcomes) {
    if (o < 2 || o > kMaxVerifyOutcomes) {
      throw Error(ErrorKind::InvalidArgument,
                  "verify supports 2 <= outcomes <= " + std::to_string(kMaxVerifyOutcomes));
    }
  }
}

}  // namespace

VerifyReport run_verify(VerifyTarget target, const VerifyConfig &config) {
  check_config(config);
  VerifyReport report;
  auto wants = [&](VerifyTarget t) { return target == VerifyTarget::All || target == t; };
  if (wants(VerifyTarget::Lemma)) {
    run_suite(lemma_suite(config), config, 1, report);
  }
  if (wants(VerifyTarget::Result1)) {
    run_suite(result1_suite(config), config, 2, report);
  }
  if (wants(VerifyTarget::Result2)) {
    run_suite(result2_suite(config), config, 3, report);
  }
  if (wants(VerifyTarget::Result3)) {
    run_suite(result3_suite(config), config, 4, report);
    report.properties.push_back(z_versus_x_witness(config.tol));
  }
  return report;
}

}  // namespace xkit
