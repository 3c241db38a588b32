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

#include <compare>
#include <limits>
#include <ostream>

namespace xkit {

// A real number or +∞. Arithmetic follows ∞ − finite = ∞ and ∞ + finite = ∞;
// ∞ − ∞ has no value and throws. +∞ compares greater than every finite value
// and equal to itself.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  static constexpr ExtendedReal finite(double v) { return ExtendedReal(v, false); }
  static constexpr ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  // The finite value; throws std::logic_error on +∞.
  double value() const;
  // The value as a double, +∞ mapped to std::numeric_limits infinity.
  constexpr double as_double() const { return inf_ ? std::numeric_limits<double>::infinity() : v_; }

  ExtendedReal operator+(ExtendedReal other) const;
  ExtendedReal operator-(ExtendedReal other) const;

  std::partial_ordering operator<=>(const ExtendedReal &other) const;
  bool operator==(const ExtendedReal &other) const;

 private:
  constexpr ExtendedReal(double v, bool inf) : v_(v), inf_(inf) {}
  double v_ = 0.0;
  bool inf_ = false;
};

std::ostream &operator<<(std::ostream &os, const ExtendedReal &x);

}  // namespace xkit
