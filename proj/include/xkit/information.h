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

#include <cstdint>
#include <vector>

#include "xkit/extended_real.h"
#include "xkit/objects.h"
#include "xkit/tolerances.h"

namespace xkit {

// All entropies are in bits.

// Joint table p(x, g): row x is the sent label, column g the decoded guess.
class JointDistribution {
 public:
  // Throws Error(InvalidDistribution) on negative entries or a total other
  // than one.
  static JointDistribution validate(Eigen::MatrixXd table, const Tolerances &tol = {});

  size_t labels() const { return static_cast<size_t>(table_.rows()); }
  size_t guesses() const { return static_cast<size_t>(table_.cols()); }
  double operator()(size_t x, size_t g) const { return table_(x, g); }
  const Eigen::MatrixXd &table() const { return table_; }

 private:
  explicit JointDistribution(Eigen::MatrixXd table) : table_(std::move(table)) {}
  Eigen::MatrixXd table_;
};

// H_{-∞}(X) = −log₂ min_x p(x); +∞ when some p(x) = 0.
ExtendedReal exclusion_entropy(const std::vector<double> &p);

// H_{-∞}(X|G) = −log₂ Σ_g min_x p(x, g); +∞ when the sum vanishes.
ExtendedReal conditional_exclusion_entropy(const JointDistribution &j);

// p(x, g) = p(x) Σ_a Tr(M_a ρ_x) d(g|a).
//
// The channel ρ ↦ Σ_a Tr(M_a ρ)|a⟩⟨a| has diagonal outputs, so an output
// measurement {D_g} only enters through d(g|a) = ⟨a|D_g|a⟩. Decoders are
// therefore stochastic maps; the identity map is the computational-basis
// readout.
JointDistribution qc_channel_joint(const Ensemble &e, const Povm &m, const StochasticMap &decoder);

struct InfoReport {
  ExtendedReal h_exclusion;
  ExtendedReal h_conditional;
  ExtendedReal i_exclusion;
};

// Entropies of the game (E, M) read out through `decoder`. The mutual
// exclusion information H(X|G) − H(X) is reported as +∞ once the error ratio
// Σ_g min_x p(x,g) / min_x p(x) drops to infinity_cutoff or below.
// Throws Error(DegenerateGame) when min_x p(x) = 0.
InfoReport exclusion_information_report(const Ensemble &e, const Povm &m, const StochasticMap &decoder,
                                        const Tolerances &tol = {});

// I_{-∞}(X:G) = H_{-∞}(X|G) − H_{-∞}(X). With the identity decoder (or the
// optimal assignment of the games module) this equals log₂(P^C / P^Q).
ExtendedReal mutual_exclusion_information(const Ensemble &e, const Povm &m, const StochasticMap &decoder,
                                          const Tolerances &tol = {});

// Excludible information of the measurement channel, −log₂(1 − WoI(M));
// +∞ when 1 − WoI(M) ≤ infinity_cutoff.
ExtendedReal excludible_information(const Povm &m, const Tolerances &tol = {});

struct DirectSearchOptions {
  size_t trials = 200;
  uint64_t seed = 1;
  // Random encodings use k ∈ [2, outcomes + extra_states] states.
  size_t extra_states = 2;
};

struct DirectSearchResult {
  ExtendedReal best;
  // Value reached by the dual-state game alone.
  ExtendedReal constructed;
  // Best value over the random encodings.
  ExtendedReal sampled;
};

// Lower-bounds the excludible information by maximizing I_{-∞}(X:G)
// directly over encodings and decodings: the optimal exclusion game with its
// optimal assignment, plus `trials` random ensembles each read out through
// their own optimal assignment. The search is over k ≤ o + extra_states
// states; the constructed game already attains the maximum.
DirectSearchResult excludible_information_direct(const Povm &m, const DirectSearchOptions &options,
                                                 const Tolerances &tol = {});

}  // namespace xkit
