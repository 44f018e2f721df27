// Copyright 2026 The sclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace sclab {

// Non-negative-denominator rational used for bound values such as 5*D^2/4.
// Comparisons cross-multiply; nothing here touches floating point.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static constexpr Fraction whole(std::int64_t v) { return {v, 1}; }

  // Largest integer not above the value.
  constexpr std::int64_t floor() const {
    const std::int64_t q = num / den;
    return (num % den != 0 && num < 0) ? q - 1 : q;
  }

  constexpr bool at_least(std::int64_t v) const { return v * den <= num; }
  constexpr bool equals(std::int64_t v) const { return v * den == num; }
};

}  // namespace sclab
