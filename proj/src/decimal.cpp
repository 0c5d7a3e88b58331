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

#include "ivsim/decimal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "ivsim/detail/bigint.hpp"
#include "ivsim/detail/rounding.hpp"
#include "ivsim/errors.hpp"

namespace ivsim {

namespace {

// Generous but bounded, so exact comparisons stay cheap.
constexpr std::size_t kMaxDigits = 800;
constexpr long kMaxExp10 = 100000;

}  // namespace

DecimalLiteral DecimalLiteral::parse(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) throw ParseError("empty decimal literal");

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool any_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      any_digit = true;
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else if (c == '.') {
      if (seen_dot) throw ParseError("malformed decimal literal: second '.'", i + 1);
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw ParseError("malformed decimal literal: no digits", i + 1);
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("malformed decimal literal: bad exponent", i + 1);
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      e = e * 10 + (s[i] - '0');
      if (e > kMaxExp10) throw ParseError("decimal exponent out of range", i + 1);
    }
    exp10 = exp_neg ? -e : e;
  }
  if (i != s.size())
    throw ParseError("malformed decimal literal: trailing characters", i + 1);
  if (digits.size() > kMaxDigits) throw ParseError("decimal literal too long");

  exp10 -= frac_digits;
  // Normalize: strip leading zeros, then trailing zeros into the exponent.
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) {
    digits = "0";
    exp10 = 0;
    negative = false;
  } else {
    digits.erase(0, first);
    std::size_t last = digits.find_last_not_of('0');
    exp10 += static_cast<long>(digits.size() - 1 - last);
    digits.erase(last + 1);
  }

  DecimalLiteral d;
  d.negative_ = negative;
  d.digits_ = std::move(digits);
  d.exp10_ = static_cast<int>(exp10);
  d.text_.assign(s);
  return d;
}

int DecimalLiteral::compare_magnitude(double v) const {
  // |value| in [10^(L+E-1), 10^(L+E)): screen the hopeless exponents so the
  // exact integer comparison stays small.
  const long approx10 = static_cast<long>(digits_.size()) + exp10_;
  if (approx10 > 310) return 1;    // above 1.8e308
  if (approx10 < -340) return -1;  // below the smallest subnormal

  double a = std::fabs(v);
  int e2;
  double fr = std::frexp(a, &e2);
  auto mant = static_cast<std::uint64_t>(std::ldexp(fr, 53));  // a = mant*2^(e2-53)
  const long f = static_cast<long>(e2) - 53;

  // D*10^E vs m*2^f with the factor 5^|E| moved to whichever side keeps
  // integers: D*5^E*2^(E-f) vs m for E >= 0, D*2^(E-f) vs m*5^-E otherwise.
  detail::BigUint lhs = detail::BigUint::from_digits(digits_);
  detail::BigUint rhs(mant);
  if (exp10_ >= 0)
    lhs = lhs.mul(detail::BigUint::pow5(static_cast<unsigned>(exp10_)));
  else
    rhs = rhs.mul(detail::BigUint::pow5(static_cast<unsigned>(-exp10_)));
  const long net2 = static_cast<long>(exp10_) - f;
  if (net2 >= 0)
    lhs.shl(static_cast<std::uint64_t>(net2));
  else
    rhs.shl(static_cast<std::uint64_t>(-net2));
  return detail::BigUint::compare(lhs, rhs);
}

int DecimalLiteral::compare_to_double(double v) const {
  if (is_zero()) return (v > 0) ? -1 : (v < 0 ? 1 : 0);
  if (v == 0) return negative_ ? -1 : 1;
  const bool vneg = std::signbit(v);
  if (negative_ != vneg) return negative_ ? -1 : 1;
  int mag = compare_magnitude(v);
  return negative_ ? -mag : mag;
}

double DecimalLiteral::to_double_nearest() const {
  if (is_zero()) return 0.0;
  // digits * 10^exp10, assembled from the normalized fields so the original
  // spelling does not matter.
  std::string s;
  if (negative_) s.push_back('-');
  s += digits_;
  s += "e";
  s += std::to_string(exp10_);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    const long approx10 = static_cast<long>(digits_.size()) + exp10_;
    if (approx10 > 0) return negative_ ? -detail::kInf : detail::kInf;
    return 0.0;
  }
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed decimal literal: " + text_);
  return v == 0 ? 0.0 : v;
}

double DecimalLiteral::to_double_down() const {
  double v = to_double_nearest();
  if (std::isinf(v))
    return v > 0 ? detail::kMaxDouble : v;
  int cmp = compare_to_double(v);
  return cmp < 0 ? detail::next_down(v) : v;
}

double DecimalLiteral::to_double_up() const {
  double v = to_double_nearest();
  if (std::isinf(v))
    return v > 0 ? v : -detail::kMaxDouble;
  int cmp = compare_to_double(v);
  return cmp > 0 ? detail::next_up(v) : v;
}

}  // namespace ivsim
