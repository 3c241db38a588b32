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

#include <string>
#include <string_view>

#include "json.hpp"
#include "xkit/extended_real.h"
#include "xkit/objects.h"
#include "xkit/tolerances.h"

namespace xkit {

// Every file the CLI reads or writes is one JSON document:
//
//   {"schema_version": 1, "kind": "povm" | "ensemble" | "stochastic_map" | "report", ...}
//
// Complex scalars are [re, im] pairs and matrices are row-major arrays of rows.
//
//   povm:           "dim", "effects": [matrix, ...]
//   ensemble:       "dim", "priors": [p, ...], "states": [matrix, ...]
//   stochastic_map: "rows", "cols", "table": [[q(x|a) for x] for a]
//   report:         "command", "inputs", "results", "diagnostics"
//
// Extended reals are {"finite": x} or {"inf": true}.

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json matrix_to_json(const ComplexMatrix &m);
// Throws Error(ParseError) naming `path` on malformed input.
ComplexMatrix matrix_from_json(const Json &j, const std::string &path);

Json extended_to_json(ExtendedReal x);
ExtendedReal extended_from_json(const Json &j, const std::string &path = "value");

Json to_document(const Povm &m);
Json to_document(const Ensemble &e);
Json to_document(const StochasticMap &q);

// Structural problems throw Error(ParseError); invariant violations throw
// Error(ValidationError) with the offending field path in the message.
Povm povm_from_document(const Json &doc, const Tolerances &tol = {});
Ensemble ensemble_from_document(const Json &doc, const Tolerances &tol = {});
StochasticMap stochastic_map_from_document(const Json &doc, const Tolerances &tol = {});

struct Report {
  std::string command;
  // Input name → {"path", "sha256"}.
  Json inputs = Json::object();
  Json results = Json::object();
  // Tolerances, seeds and timing.
  Json diagnostics = Json::object();

  Json to_document() const;
  static Report from_document(const Json &doc);
  bool operator==(const Report &other) const = default;
};

// Parses `text` and checks schema_version and, when non-empty, the kind.
Json parse_document(std::string_view text, std::string_view expected_kind = {});

struct LoadedDocument {
  Json doc;
  std::string sha256;
};

LoadedDocument load_document(const std::string &path, std::string_view expected_kind = {});

std::string sha256_hex(std::string_view bytes);

}  // namespace xkit
