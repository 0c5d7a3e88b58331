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

#include "ivsim/detail/bigint.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ivsim::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 v) {
  if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_digits(std::string_view digits) {
  BigUint r;
  for (char c : digits) {
    assert(c >= '0' && c <= '9');
    r.mul_u64(10);
    r.add_u64(static_cast<u64>(c - '0'));
  }
  return r;
}

BigUint BigUint::pow5(unsigned k) {
  // 5^27 is the largest power of five below 2^64.
  constexpr u64 kPow5_27 = 7450580596923828125ull;
  BigUint r(1);
  while (k >= 27) {
    r.mul_u64(kPow5_27);
    k -= 27;
  }
  u64 p = 1;
  while (k--) p *= 5;
  r.mul_u64(p);
  return r;
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) +
         (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

void BigUint::mul_u64(u64 m) {
  if (m == 0) {
    limbs_.clear();
    return;
  }
  u64 carry = 0;
  for (u64& limb : limbs_) {
    u128 t = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(t);
    carry = static_cast<u64>(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
}

void BigUint::add_u64(u64 a) {
  for (std::size_t i = 0; a != 0 && i < limbs_.size(); ++i) {
    u128 t = static_cast<u128>(limbs_[i]) + a;
    limbs_[i] = static_cast<u64>(t);
    a = static_cast<u64>(t >> 64);
  }
  if (a) limbs_.push_back(a);
}

void BigUint::shl(u64 bits) {
  if (limbs_.empty() || bits == 0) return;
  const std::size_t limb_shift = bits / 64;
  const unsigned bit_shift = bits % 64;
  std::size_t old_size = limbs_.size();
  limbs_.resize(old_size + limb_shift + (bit_shift ? 1 : 0), 0);
  for (std::size_t i = old_size; i-- > 0;) {
    u64 v = limbs_[i];
    limbs_[i] = 0;
    if (bit_shift) {
      limbs_[i + limb_shift + 1] |= v >> (64 - bit_shift);
      limbs_[i + limb_shift] |= v << bit_shift;
    } else {
      limbs_[i + limb_shift] = v;
    }
  }
  trim();
}

BigUint BigUint::mul(const BigUint& other) const {
  BigUint r;
  if (limbs_.empty() || other.limbs_.empty()) return r;
  r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      u128 t = static_cast<u128>(limbs_[i]) * other.limbs_[j] +
               r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    r.limbs_[i + other.limbs_.size()] = carry;
  }
  r.trim();
  return r;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

u64 BigUint::top_bits(unsigned count, bool* sticky) const {
  const std::size_t bl = bit_length();
  assert(count >= 1 && count <= 64 && count <= bl);
  const std::size_t drop = bl - count;
  const std::size_t limb = drop / 64;
  const unsigned off = drop % 64;
  u64 q = limbs_[limb] >> off;
  if (off && limb + 1 < limbs_.size()) q |= limbs_[limb + 1] << (64 - off);
  if (count < 64) q &= (u64{1} << count) - 1;
  bool s = off != 0 && (limbs_[limb] & ((u64{1} << off) - 1)) != 0;
  for (std::size_t i = 0; !s && i < limb; ++i) s = limbs_[i] != 0;
  *sticky = s;
  return q;
}

u64 BigUint::to_u64() const {
  assert(bit_length() <= 64);
  return limbs_.empty() ? 0 : limbs_[0];
}

double to_double_directed(const BigUint& mag, long exp2, bool round_up) {
  if (mag.is_zero()) return 0.0;
  const long bl = static_cast<long>(mag.bit_length());
  // Drop low bits until the kept integer has at most 53 bits and its
  // quantum 2^(exp2 + drop) is representable (>= 2^-1074).
  long drop = bl - 53;
  if (exp2 + drop < -1074) drop = -1074 - exp2;
  u64 q;
  bool sticky;
  if (drop <= 0) {
    q = mag.to_u64() << static_cast<unsigned>(-drop);
    sticky = false;
  } else if (drop >= bl) {
    q = 0;
    sticky = true;
  } else {
    q = mag.top_bits(static_cast<unsigned>(bl - drop), &sticky);
  }
  long e = exp2 + drop;
  if (sticky && round_up) {
    if (++q == (u64{1} << 53)) {
      q >>= 1;
      ++e;
    }
  }
  if (q == 0) return 0.0;  // reachable only when rounding toward zero
  if (e > 2000) e = 2000;  // keep the ldexp argument in int range
  double r = std::ldexp(static_cast<double>(q), static_cast<int>(e));
  if (std::isinf(r) && !round_up) return std::numeric_limits<double>::max();
  return r;
}

}  // namespace ivsim::detail
