// Copyright 2026 The ccv Authors.
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

#ifndef CCV_NUMERIC_HPP_
#define CCV_NUMERIC_HPP_

#include <cstdint>
#include <numeric>

#include "ccv/error.hpp"

namespace ccv {

using Int = std::int64_t;

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow");
  return out;
}

inline Int checked_lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

// Residue of a modulo m in [0, m). m must be positive.
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ccv

#endif  // CCV_NUMERIC_HPP_
