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
#include <string>
#include <string_view>
#include <vector>

#include "xkit/tolerances.h"

namespace xkit {

enum class VerifyTarget { Lemma, Result1, Result2, Result3, All };

// Accepts "lemma", "result1", "result2", "result3", "all".
VerifyTarget parse_verify_target(std::string_view name);
std::string_view to_string(VerifyTarget target);

struct VerifyConfig {
  size_t trials = 100;
  // Trial t uses dims[t % |dims|] and outcomes[(t / |dims|) % |outcomes|].
  std::vector<size_t> dims{2, 3};
  std::vector<size_t> outcomes{2, 3};
  uint64_t seed = 1;
  // 0 = available parallelism.
  size_t jobs = 0;
  Tolerances tol;

  // Random games per POVM for the advantage lower bound.
  size_t ensembles_per_povm = 20;
  // Random encodings per POVM in the direct excludible-information search.
  size_t search_trials = 50;
  // Random games per pair in the simulation audit.
  size_t audit_samples = 100;
  size_t witness_restarts = 8;
};

inline constexpr size_t kMaxVerifyDim = 6;
inline constexpr size_t kMaxVerifyOutcomes = 6;

struct PropertyOutcome {
  std::string name;
  size_t passed = 0;
  size_t total = 0;
  // Passes needed for the property to hold.
  size_t required = 0;
  // Smallest (bound − observed) over all checks; negative on a failure.
  double worst_margin = 0.0;

  bool ok() const { return passed >= required; }
};

struct VerifyReport {
  std::vector<PropertyOutcome> properties;

  bool all_passed() const;
};

// Throws Error(InvalidArgument) when dims or outcomes fall outside
// [2, kMaxVerifyDim] / [2, kMaxVerifyOutcomes] or trials is zero.
VerifyReport run_verify(VerifyTarget target, const VerifyConfig &config);

}  // namespace xkit
