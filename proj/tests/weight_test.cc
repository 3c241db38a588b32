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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "test_util.h"

namespace xkit {
namespace {

using testing::diagonal_woi_06;
using testing::proj;
using testing::qubit_lambda_min;
using testing::qubit_z;
using testing::uninformative;

TEST(woi, examples) {
  EXPECT_NEAR(woi(qubit_z()), 1.0, 1e-12);
  EXPECT_NEAR(woi(uninformative(2, {0.3, 0.7})), 0.0, 1e-12);
  EXPECT_NEAR(woi(diagonal_woi_06()), 0.6, 1e-12);
}

TEST(woi, qubit_closed_form_oracle) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Povm m = random_povm(2, 2 + seed % 4, seed);
    double sum = 0.0;
    for (const auto &e : m.effects()) {
      sum += std::max(0.0, qubit_lambda_min(e));
    }
    EXPECT_NEAR(woi(m), 1.0 - sum, 1e-10);
  }
}

TEST(woi, primal_examples) {
  PrimalSolution z = woi_primal(qubit_z());
  EXPECT_NEAR(z.woi, 1.0, 1e-12);
  EXPECT_NEAR(z.weights[0], 0.0, 1e-12);
  EXPECT_NEAR(z.weights[1], 0.0, 1e-12);

  PrimalSolution u = woi_primal(uninformative(2, {0.3, 0.7}));
  EXPECT_NEAR(u.woi, 0.0, 1e-12);
  EXPECT_NEAR(u.weights[0], 0.3, 1e-12);
  EXPECT_NEAR(u.weights[1], 0.7, 1e-12);

  Povm m = random_povm(3, 4, 7);
  EXPECT_NEAR(woi_primal(m).woi, woi(m), 1e-10);
}

TEST(woi, primal_weights_are_feasible) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Povm m = random_povm(3, 3, seed);
    PrimalSolution p = woi_primal(m);
    for (size_t a = 0; a < m.outcomes(); ++a) {
      EXPECT_GE(p.weights[a], 0.0);
      HermitianOperator slack = m[a] - p.weights[a] * HermitianOperator::identity(3);
      EXPECT_GE(lambda_min(slack), -1e-9);
    }
  }
}

TEST(woi, decomposition_examples) {
  WeightDecomposition u = woi_decomposition(uninformative(2, {0.3, 0.7}));
  EXPECT_NEAR(u.w_star, 0.0, 1e-12);
  EXPECT_NEAR(u.q_star[0], 0.3, 1e-12);
  EXPECT_NEAR(u.q_star[1], 0.7, 1e-12);

  Povm z = qubit_z();
  WeightDecomposition zd = woi_decomposition(z);
  EXPECT_NEAR(zd.w_star, 1.0, 1e-12);
  EXPECT_NEAR(zd.q_star[0], 0.5, 1e-12);
  EXPECT_LE(max_abs(zd.n_star[0].matrix() - z[0].matrix()), 1e-12);
  EXPECT_LE(zd.residual(z), 1e-12);

  double eps = 0.4;
  HermitianOperator id = HermitianOperator::identity(2);
  Povm noisy = Povm::validate({(1 - eps) * z[0] + (eps / 2) * id, (1 - eps) * z[1] + (eps / 2) * id});
  WeightDecomposition nd = woi_decomposition(noisy);
  EXPECT_NEAR(nd.w_star, 0.6, 1e-12);
  EXPECT_LE(max_abs(nd.n_star[0].matrix() - z[0].matrix()), 1e-10);
  EXPECT_LE(max_abs(nd.n_star[1].matrix() - z[1].matrix()), 1e-10);
  EXPECT_LE(nd.residual(noisy), 1e-10);
}

TEST(woi, decomposition_reconstructs_random) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Povm m = random_povm(2 + seed % 3, 2 + seed % 4, seed);
    WeightDecomposition d = woi_decomposition(m);
    EXPECT_NEAR(d.w_star, woi(m), 1e-12);
    EXPECT_LE(d.residual(m), 1e-10);
    double total = 0.0;
    for (double q : d.q_star) {
      EXPECT_GE(q, 0.0);
      total += q;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(woi, dual_examples) {
  DualStates z = dual_optimal_states(qubit_z());
  EXPECT_NEAR(z.states[0](1, 1).real(), 1.0, 1e-12);
  EXPECT_NEAR(z.states[1](0, 0).real(), 1.0, 1e-12);
  EXPECT_NEAR(z.value, 0.0, 1e-12);

  DualStates u = dual_optimal_states(uninformative(2, {0.5, 0.5}));
  EXPECT_NEAR(u.value, 1.0, 1e-12);
  for (const auto &rho : u.states) {
    EXPECT_NEAR(trace_product(rho, rho), 1.0, 1e-12);
  }
}

// Brute-force minimization of Tr(rho M_a) over a Bloch-sphere grid of pure states.
double bloch_grid_min(const HermitianOperator &e, size_t n_theta, size_t n_phi) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i <= n_theta; ++i) {
    double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta);
    for (size_t j = 0; j < n_phi; ++j) {
      double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_phi);
      ComplexVector v(2);
      v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
      best = std::min(best, (v.adjoint() * e.matrix() * v)(0, 0).real());
    }
  }
  return best;
}

TEST(woi, dual_matches_bloch_grid_oracle) {
  Povm m = random_povm(2, 3, 3);
  double oracle = 0.0;
  for (const auto &e : m.effects()) {
    oracle += bloch_grid_min(e, 100, 100);
  }
  DualStates d = dual_optimal_states(m);
  // The grid only approaches the minimum from above; its spacing bounds the gap.
  EXPECT_LE(d.value, oracle + 1e-12);
  EXPECT_NEAR(d.value, oracle, 2e-3);
  EXPECT_NEAR(d.value, 1.0 - woi(m), 1e-9);
}

TEST(woi, strong_duality_random) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Povm m = random_povm(2 + seed % 3, 2 + seed % 4, seed + 1000);
    DualStates d = dual_optimal_states(m);
    EXPECT_NEAR(woi_primal(m).woi, 1.0 - d.value, 1e-9);
    for (const auto &rho : d.states) {
      EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
      EXPECT_GE(lambda_min(rho), -1e-12);
    }
  }
}

TEST(woi, convexity_monotonicity_and_extremes) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Povm m1 = random_povm(3, 3, seed);
    Povm m2 = random_povm(3, 3, seed + 500);
    double p = static_cast<double>(seed % 10) / 10.0;
    EXPECT_LE(woi(mix(m1, m2, p)), p * woi(m1) + (1 - p) * woi(m2) + 1e-8);

    StochasticMap q = random_stochastic_map(3, 2 + seed % 3, seed);
    EXPECT_LE(woi(apply_postprocessing(m1, q)), woi(m1) + 1e-8);

    EXPECT_NEAR(woi(random_projective_povm(2 + seed % 3, seed)), 1.0, 1e-9);
    EXPECT_NEAR(woi(random_uninformative_povm(3, 3, seed)), 0.0, 1e-9);
  }
}

}  // namespace
}  // namespace xkit
