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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "xkit/cli.h"
#include "xkit/games.h"
#include "xkit/information.h"
#include "xkit/simulability.h"
#include "xkit/weight.h"

namespace {

using namespace xkit;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

HermitianOperator projector(std::initializer_list<Complex> v) {
  ComplexVector k(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (Complex c : v) {
    k(i++) = c;
  }
  return HermitianOperator::projector(k);
}

Povm qubit_z() {
  return Povm::validate({projector({1, 0}), projector({0, 1})});
}

Povm qubit_x() {
  double s = 1.0 / std::sqrt(2.0);
  return Povm::validate({projector({s, s}), projector({s, -s})});
}

// Cycles through d in {2,3,4} and o in {2..5}.
std::pair<size_t, size_t> shape(size_t i) {
  return {2 + i % 3, 2 + (i / 3) % 4};
}

Check ac1() {
  Check c;
  for (size_t i = 0; i < 300; ++i) {
    auto [d, o] = shape(i);
    Povm m = random_povm(d, o, derive_seed(101, i));
    double closed = woi(m);
    double primal = woi_primal(m).woi;
    double dual = dual_optimal_states(m).value;
    c.require(std::abs(closed - primal) <= 1e-10, "closed form vs primal, instance " + std::to_string(i));
    c.require(std::abs(primal - (1.0 - dual)) <= 1e-9, "strong duality, instance " + std::to_string(i));
  }
  return c;
}

Check ac2() {
  Check c;
  const double tol = 1e-9;
  for (size_t i = 0; i < 100; ++i) {
    auto [d, o] = shape(i);
    Povm u = random_uninformative_povm(d, o, derive_seed(201, i));
    c.require(woi(u) <= tol && is_uninformative(u, 1e-9).has_value(), "faithfulness (uninformative) " + std::to_string(i));
    Povm m = random_povm(d, o, derive_seed(202, i));
    c.require(woi(m) > tol && !is_uninformative(m, 1e-9).has_value(), "faithfulness (informative) " + std::to_string(i));
  }
  auto in_bounds = [](double w) { return w >= 0.0 && w <= 1.0; };
  for (size_t i = 0; i < 200; ++i) {
    auto [d, o] = shape(i);
    Povm m1 = random_povm(d, o, derive_seed(203, i));
    Povm m2 = random_povm(d, o, derive_seed(204, i));
    double p = static_cast<double>(i % 21) / 20.0;
    double mixed = woi(mix(m1, m2, p));
    c.require(mixed <= p * woi(m1) + (1 - p) * woi(m2) + 1e-8, "convexity " + std::to_string(i));
    c.require(in_bounds(woi(m1)) && in_bounds(woi(m2)) && in_bounds(mixed), "bounds " + std::to_string(i));

    StochasticMap q = random_stochastic_map(o, 2 + i % 4, derive_seed(205, i));
    double post = woi(apply_postprocessing(m1, q));
    c.require(post <= woi(m1) + 1e-8, "monotonicity " + std::to_string(i));
    c.require(in_bounds(post), "bounds (post-processed) " + std::to_string(i));
  }
  for (size_t i = 0; i < 50; ++i) {
    Povm p = random_projective_povm(2 + i % 3, derive_seed(206, i));
    c.require(std::abs(woi(p) - 1.0) <= 1e-9, "projective maximality " + std::to_string(i));
  }
  return c;
}

Check ac3() {
  Check c;
  for (size_t i = 0; i < 100; ++i) {
    auto [d, o] = shape(i);
    Povm m = random_povm(d, o, derive_seed(301, i));
    double bound = 1.0 - woi(m);
    size_t ensembles = d == 2 ? 1000 : 100;
    for (size_t t = 0; t < ensembles; ++t) {
      Ensemble e = random_ensemble(d, 2 + t % 5, derive_seed(derive_seed(302, i), t));
      c.require(advantage_ratio(e, m) >= bound - 1e-7, "lower bound, povm " + std::to_string(i));
    }
    double eq = advantage_ratio(optimal_exclusion_game(m), m);
    c.require(std::abs(eq - bound) <= 1e-7, "equality, povm " + std::to_string(i));
  }
  return c;
}

Check ac4() {
  Check c;
  size_t done = 0;
  for (size_t i = 0; done < 100; ++i) {
    auto [d, o] = shape(i);
    Povm m = random_povm(d, o, derive_seed(401, i));
    double w = woi(m);
    if (w >= 1.0 - 1e-6) {
      continue;
    }
    ++done;
    DirectSearchResult r = excludible_information_direct(m, {200, derive_seed(402, i), 2});
    double formula = -std::log2(1.0 - w);
    c.require(r.best.is_finite() && std::abs(r.best.value() - formula) <= 1e-6,
              "direct vs formula, povm " + std::to_string(i));
  }
  for (size_t i = 0; i < 20; ++i) {
    Povm p = random_projective_povm(2 + i % 3, derive_seed(403, i));
    DirectSearchResult r = excludible_information_direct(p, {200, derive_seed(404, i), 2});
    c.require(excludible_information(p).is_infinite() && r.best.is_infinite(),
              "projective infinity " + std::to_string(i));
  }
  return c;
}

Check ac5() {
  Check c;
  for (size_t i = 0; i < 50; ++i) {
    auto [d, o] = shape(i);
    Povm m = random_povm(d, o, derive_seed(501, i));
    Povm n = apply_postprocessing(m, random_stochastic_map(o, 2 + i % 4, derive_seed(502, i)));
    c.require(check_simulable(m, n).simulable(), "post-processing verdict " + std::to_string(i));
    c.require(monotone_audit(m, n, 500, derive_seed(503, i)).violations == 0, "audit " + std::to_string(i));
  }

  auto zx = find_violating_ensemble(qubit_z(), qubit_x());
  c.require(zx && zx->violation >= 0.1, "Z/X witness violation");

  size_t pairs = 0;
  size_t found = 0;
  for (size_t i = 0; pairs < 20; ++i) {
    auto [d, o] = shape(i);
    Povm m = random_povm(d, o, derive_seed(504, i));
    Povm n = random_povm(d, 2 + (i + 1) % 4, derive_seed(505, i));
    if (check_simulable(m, n).simulable()) {
      continue;
    }
    ++pairs;
    WitnessSearchOptions opt;
    opt.seed = derive_seed(506, i);
    auto w = find_violating_ensemble(m, n, opt);
    if (w && w->violation >= 1e-7) {
      ++found;
    }
  }
  c.require(found >= 18, "witnesses found in " + std::to_string(found) + "/20 random pairs");
  return c;
}

// Exhaustive minimum over all deterministic outcome-to-guess assignments.
double brute_force(const Ensemble &e, const Povm &m) {
  size_t k = e.size();
  size_t o = m.outcomes();
  size_t total = static_cast<size_t>(std::llround(std::pow(k, o)));
  double best = 1e300;
  for (size_t code = 0; code < total; ++code) {
    double err = 0.0;
    size_t rest = code;
    for (size_t a = 0; a < o; ++a) {
      size_t g = rest % k;
      rest /= k;
      err += e.prior(g) * trace_product(m[a], e.state(g));
    }
    best = std::min(best, err);
  }
  return best;
}

Check ac6() {
  Check c;
  size_t instances = 0;
  for (size_t d = 2; d <= 4; ++d) {
    for (size_t k = 1; k <= 8; ++k) {
      for (size_t o = 2; o <= 12; ++o) {
        if (std::pow(static_cast<double>(k), static_cast<double>(o)) > 4096) {
          break;
        }
        uint64_t s = derive_seed(601, d * 10000 + k * 100 + o);
        Povm m = random_povm(d, o, s);
        Ensemble e = random_ensemble(d, k, derive_seed(s, 1));
        c.require(std::abs(quantum_error(e, m).p_err_quantum - brute_force(e, m)) <= 1e-12,
                  "brute force d=" + std::to_string(d) + " k=" + std::to_string(k) + " o=" + std::to_string(o));
        ++instances;
      }
    }
  }
  c.require(instances > 0, "no instances");
  return c;
}

Check ac7() {
  Check c;
  c.require(woi(qubit_z()) == 1.0, "woi(qubit Z) = 1");
  HermitianOperator id = HermitianOperator::identity(2);
  Povm u = Povm::validate({0.3 * id, 0.7 * id});
  c.require(woi(u) == 0.0, "woi(uninformative) = 0");
  ExtendedReal info = excludible_information(u);
  c.require(info.is_finite() && info.value() == 0.0, "excludible information(uninformative) = 0");
  return c;
}

Check ac8() {
  Check c;
  VerifyConfig config;
  config.trials = 20;
  config.seed = 8;
  auto strip = [](xkit::Report r) {
    r.diagnostics.erase("timing");
    return r.to_document().dump();
  };
  std::string first = strip(cli::verify_command(VerifyTarget::All, config).report);
  config.jobs = 1;
  std::string second = strip(cli::verify_command(VerifyTarget::All, config).report);
  c.require(first == second, "reports differ between runs");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char *name;
    double limit_seconds;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 closed form vs primal and strong duality", 10, ac1},
      {"AC2 weight properties", 20, ac2},
      {"AC3 exclusion advantage bound and equality", 60, ac3},
      {"AC4 excludible information", 30, ac4},
      {"AC5 simulability and witnesses", 60, ac5},
      {"AC6 brute-force strategy oracle", 0, ac6},
      {"AC7 exact values", 0, ac7},
      {"AC8 verify determinism", 0, ac8},
  };
  int failures = 0;
  for (const auto &criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criterion.run();
    } catch (const std::exception &e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && criterion.limit_seconds > 0 && elapsed > criterion.limit_seconds) {
      c.ok = false;
      c.detail = "runtime limit exceeded";
    }
    std::printf("%s %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", criterion.name, elapsed, c.ok ? "" : ": ",
                c.detail.c_str());
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
