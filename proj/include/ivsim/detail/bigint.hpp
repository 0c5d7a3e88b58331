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

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ivsim::detail {

// Arbitrary-size unsigned integer, little-endian 64-bit limbs.
// Just enough arithmetic for exact decimal-vs-binary comparison and
// correctly rounded integer powers: multiply, shift, compare. No
// division and no general subtraction.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  // Base-10 digit string, no sign, no separators. Must be non-empty.
  static BigUint from_digits(std::string_view digits);
  static BigUint pow5(unsigned k);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;

  void mul_u64(std::uint64_t m);
  void add_u64(std::uint64_t a);
  void shl(std::uint64_t bits);
  BigUint mul(const BigUint& other) const;

  // -1, 0, +1 for a < b, a == b, a > b.
  static int compare(const BigUint& a, const BigUint& b);

  // Value of the top `count` bits (1 <= count <= 64, count <= bit_length),
  // i.e. floor(x / 2^(bit_length - count)). Sets *sticky when any lower
  // bit is nonzero.
  std::uint64_t top_bits(unsigned count, bool* sticky) const;

  // Whole value as uint64; bit_length() must be <= 64.
  std::uint64_t to_u64() const;

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;  // little-endian, no high zero limbs
};

// mag * 2^exp2 rounded to binary64 magnitude: toward +inf when round_up,
// toward zero otherwise. Saturates at DBL_MAX / +inf on overflow and at
// 0 / DBL_TRUE_MIN on underflow, per the rounding direction.
double to_double_directed(const BigUint& mag, long exp2, bool round_up);

}  // namespace ivsim::detail
