// Copyright 2026 The ivsim Authors
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

#include "ivsim/detail/rounding.hpp"

#include <cmath>

namespace ivsim::detail {

double pow_magnitude(double magnitude, long p, bool round_up) {
  if (p == 1 || magnitude == 0 || std::isinf(magnitude)) return magnitude;
  // Power the 53-bit mantissa exactly and round once. 53 * 1024 bits is
  // still tiny; larger exponents fall back to a directed chain.
  constexpr long kExactCap = 1024;
  if (p <= kExactCap) {
    int e;
    double fr = std::frexp(magnitude, &e);
    auto mant = static_cast<std::uint64_t>(std::ldexp(fr, 53));
    BigUint acc(mant);
    for (long i = 1; i < p; ++i) acc.mul_u64(mant);
    long exp2 = p * (static_cast<long>(e) - 53);
    return to_double_directed(acc, exp2, round_up);
  }
  double acc = magnitude;
  for (long i = 1; i < p; ++i)
    acc = round_up ? mul_up(acc, magnitude) : mul_down(acc, magnitude);
  return acc;
}

}  // namespace ivsim::detail
