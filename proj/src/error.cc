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

#include "xkit/error.h"

namespace xkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian:
      return "NotHermitian";
    case ErrorKind::NotPsd:
      return "NotPsd";
    case ErrorKind::CompletenessViolation:
      return "CompletenessViolation";
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::InvalidDistribution:
      return "InvalidDistribution";
    case ErrorKind::NoConvergence:
      return "NoConvergence";
    case ErrorKind::SingularNormalization:
      return "SingularNormalization";
    case ErrorKind::DegenerateGame:
      return "DegenerateGame";
    case ErrorKind::NumericalInstability:
      return "NumericalInstability";
    case ErrorKind::InvalidState:
      return "InvalidState";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
    case ErrorKind::ParseError:
      return "ParseError";
    case ErrorKind::ValidationError:
      return "ValidationError";
  }
  return "Unknown";
}

}  // namespace xkit
