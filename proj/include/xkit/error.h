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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xkit {

enum class ErrorKind {
  NotHermitian,
  NotPsd,
  CompletenessViolation,
  DimensionMismatch,
  InvalidDistribution,
  NoConvergence,
  SingularNormalization,
  DegenerateGame,
  NumericalInstability,
  InvalidState,
  InvalidArgument,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the toolkit. `index` names the offending item
// (effect, state or row) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message, std::optional<size_t> index = std::nullopt)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  ErrorKind kind() const { return kind_; }
  std::optional<size_t> index() const { return index_; }

 private:
  ErrorKind kind_;
  std::optional<size_t> index_;
};

}  // namespace xkit
