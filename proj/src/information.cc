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

#include "xkit/information.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xkit/error.h"
#include "xkit/games.h"
#include "xkit/weight.h"

namespace xkit {

double ExtendedReal::value() const {
  if (inf_) {
    throw std::logic_error("ExtendedReal::value() called on +inf");
  }
  return v_;
}

ExtendedReal ExtendedReal::operator+(ExtendedReal other) const {
  if (inf_ || other.inf_) {
    return infinity();
  }
  return finite(v_ + other.v_);
}

ExtendedReal ExtendedReal::operator-(ExtendedReal other) const {
  if (other.inf_) {
    throw std::domain_error("ExtendedReal: subtracting +inf is undefined");
  }
  if (inf_) {
    return infinity();
  }
  return finite(v_ - other.v_);
}

std::partial_ordering ExtendedReal::operator<=>(const ExtendedReal &other) const {
  if (inf_ && other.inf_) {
    return std::partial_ordering::equivalent;
  }
  if (inf_) {
    return std::partial_ordering::greater;
  }
  if (other.inf_) {
    return std::partial_ordering::less;
  }
  return v_ <=> other.v_;
}

bool ExtendedReal::operator==(const ExtendedReal &other) const {
  return (*this <=> other) == std::partial_ordering::equivalent;
}

std::ostream &operator<<(std::ostream &os, const ExtendedReal &x) {
  if (x.is_infinite()) {
    return os << "inf";
  }
  return os << x.value();
}

JointDistribution JointDistribution::validate(Eigen::MatrixXd table, const Tolerances &tol) {
  if (table.size() == 0) {
    throw Error(ErrorKind::InvalidDistribution, "joint distribution is empty");
  }
  if (table.minCoeff() < 0.0) {
    throw Error(ErrorKind::InvalidDistribution, "joint distribution has a negative entry");
  }
  if (std::abs(table.sum() - 1.0) > tol.prob_tol) {
    throw Error(ErrorKind::InvalidDistribution, "joint distribution does not sum to one");
  }
  return JointDistribution(std::move(table));
}

namespace {

ExtendedReal neg_log2(double p) {
  if (p <= 0.0) {
    return ExtendedReal::infinity();
  }
  return ExtendedReal::finite(-std::log2(p));
}

double conditional_error(const JointDistribution &j) {
  double s = 0.0;
  for (size_t g = 0; g < j.guesses(); ++g) {
    s += j.table().col(static_cast<Eigen::Index>(g)).minCoeff();
  }
  return s;
}

}  // namespace

ExtendedReal exclusion_entropy(const std::vector<double> &p) {
  if (p.empty()) {
    throw Error(ErrorKind::InvalidDistribution, "exclusion entropy of an empty distribution");
  }
  const Tolerances tol;
  double total = 0.0;
  for (size_t x = 0; x < p.size(); ++x) {
    if (p[x] < -tol.prob_tol) {
      throw Error(ErrorKind::InvalidDistribution, "probability " + std::to_string(x) + " is negative", x);
    }
    total += p[x];
  }
  if (std::abs(total - 1.0) > tol.prob_tol) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
  return neg_log2(*std::min_element(p.begin(), p.end()));
}

ExtendedReal conditional_exclusion_entropy(const JointDistribution &j) {
  return neg_log2(conditional_error(j));
}

JointDistribution qc_channel_joint(const Ensemble &e, const Povm &m, const StochasticMap &decoder) {
  if (e.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble and POVM act on different dimensions");
  }
  if (decoder.rows() != m.outcomes()) {
    throw Error(ErrorKind::DimensionMismatch, "decoder rows must match the POVM outcome count");
  }
  Eigen::MatrixXd born(e.size(), m.outcomes());
  for (size_t x = 0; x < e.size(); ++x) {
    for (size_t a = 0; a < m.outcomes(); ++a) {
      // Born probabilities can dip below zero by rounding on orthogonal supports.
      born(x, a) = e.prior(x) * std::max(0.0, trace_product(m[a], e.state(x)));
    }
  }
  Eigen::MatrixXd joint = born * decoder.table();
  // Absorb the completeness slack a validated POVM may still carry.
  double total = joint.sum();
  if (std::abs(total - 1.0) > Tolerances{}.prob_tol) {
    joint /= total;
  }
  return JointDistribution::validate(std::move(joint));
}

InfoReport exclusion_information_report(const Ensemble &e, const Povm &m, const StochasticMap &decoder,
                                        const Tolerances &tol) {
  double classical = classical_error(e);
  if (classical <= 0.0) {
    throw Error(ErrorKind::DegenerateGame, "mutual exclusion information undefined: some state has zero prior");
  }
  JointDistribution j = qc_channel_joint(e, m, decoder);
  double conditional = conditional_error(j);
  InfoReport out;
  out.h_exclusion = neg_log2(classical);
  out.h_conditional = neg_log2(conditional);
  if (conditional <= tol.infinity_cutoff * classical) {
    out.i_exclusion = ExtendedReal::infinity();
  } else {
    out.i_exclusion = out.h_conditional - out.h_exclusion;
  }
  return out;
}

ExtendedReal mutual_exclusion_information(const Ensemble &e, const Povm &m, const StochasticMap &decoder,
                                          const Tolerances &tol) {
  return exclusion_information_report(e, m, decoder, tol).i_exclusion;
}

ExtendedReal excludible_information(const Povm &m, const Tolerances &tol) {
  double free_weight = 1.0 - woi(m);
  if (free_weight <= tol.infinity_cutoff) {
    return ExtendedReal::infinity();
  }
  return ExtendedReal::finite(-std::log2(free_weight));
}

DirectSearchResult excludible_information_direct(const Povm &m, const DirectSearchOptions &options,
                                                 const Tolerances &tol) {
  if (options.trials < 1) {
    throw Error(ErrorKind::InvalidArgument, "excludible_information_direct needs at least one trial");
  }
  DirectSearchResult out;

  Ensemble game = optimal_exclusion_game(m);
  StochasticMap game_decoder = quantum_error(game, m).strategy(game.size());
  out.constructed = mutual_exclusion_information(game, m, game_decoder, tol);

  out.sampled = ExtendedReal::finite(-std::numeric_limits<double>::infinity());
  const size_t k_max = m.outcomes() + options.extra_states;
  for (size_t t = 0; t < options.trials; ++t) {
    uint64_t s = derive_seed(options.seed, t);
    Rng rng(s);
    size_t k = std::uniform_int_distribution<size_t>(2, k_max)(rng);
    Ensemble e = random_ensemble(m.dim(), k, derive_seed(s, 1));
    StochasticMap random_decoder = random_stochastic_map(m.outcomes(), k, derive_seed(s, 2));
    StochasticMap best_decoder = quantum_error(e, m).strategy(k);
    out.sampled = std::max(out.sampled, mutual_exclusion_information(e, m, random_decoder, tol));
    out.sampled = std::max(out.sampled, mutual_exclusion_information(e, m, best_decoder, tol));
  }
  out.best = std::max(out.constructed, out.sampled);
  return out;
}

}  // namespace xkit
