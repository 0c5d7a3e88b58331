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

#include "ivsim/interval.hpp"

#include <algorithm>
#include <cmath>

#include "ivsim/detail/rounding.hpp"
#include "ivsim/errors.hpp"

namespace ivsim {

using detail::add_down;
using detail::add_up;
using detail::div_down;
using detail::div_up;
using detail::mul_down;
using detail::mul_up;
using detail::sub_down;
using detail::sub_up;

namespace {
inline double normalize_zero(double x) { return x == 0 ? 0.0 : x; }
}  // namespace

Interval::Interval(double lo, double hi)
    : lo_(normalize_zero(lo)), hi_(normalize_zero(hi)) {
  if (!(lo_ <= hi_))  // also rejects NaN
    throw DomainError("invalid interval endpoints");
}

Interval Interval::point(double x) { return {x, x}; }

bool Interval::is_bounded() const {
  return std::isfinite(lo_) && std::isfinite(hi_);
}

Interval from_decimal(const DecimalLiteral& d, EnclosureMode mode) {
  if (mode == EnclosureMode::degenerate_nearest) {
    double v = d.to_double_nearest();
    if (std::isinf(v))
      throw DomainError("decimal value outside the finite binary64 range: " +
                        d.text());
    return Interval::point(v);
  }
  return {d.to_double_down(), d.to_double_up()};
}

Interval from_decimal(std::string_view text, EnclosureMode mode) {
  return from_decimal(DecimalLiteral::parse(text), mode);
}

Interval add(const Interval& x, const Interval& y) {
  return {add_down(x.lo(), y.lo()), add_up(x.hi(), y.hi())};
}

Interval sub(const Interval& x, const Interval& y) {
  return {sub_down(x.lo(), y.hi()), sub_up(x.hi(), y.lo())};
}

Interval mul(const Interval& x, const Interval& y) {
  const double lo = std::min(
      std::min(mul_down(x.lo(), y.lo()), mul_down(x.lo(), y.hi())),
      std::min(mul_down(x.hi(), y.lo()), mul_down(x.hi(), y.hi())));
  const double hi =
      std::max(std::max(mul_up(x.lo(), y.lo()), mul_up(x.lo(), y.hi())),
               std::max(mul_up(x.hi(), y.lo()), mul_up(x.hi(), y.hi())));
  return {lo, hi};
}

Interval div(const Interval& x, const Interval& y) {
  if (y.lo() <= 0 && y.hi() >= 0)
    throw DomainError("division by an interval containing zero");
  const double lo = std::min(
      std::min(div_down(x.lo(), y.lo()), div_down(x.lo(), y.hi())),
      std::min(div_down(x.hi(), y.lo()), div_down(x.hi(), y.hi())));
  const double hi =
      std::max(std::max(div_up(x.lo(), y.lo()), div_up(x.lo(), y.hi())),
               std::max(div_up(x.hi(), y.lo()), div_up(x.hi(), y.hi())));
  return {lo, hi};
}

Interval pow_int(const Interval& x, long p) {
  if (p < 1) throw DomainError("pow_int exponent must be >= 1");
  if (p % 2 != 0) return {detail::pow_down(x.lo(), p), detail::pow_up(x.hi(), p)};
  if (x.lo() >= 0) return {detail::pow_down(x.lo(), p), detail::pow_up(x.hi(), p)};
  if (x.hi() <= 0) return {detail::pow_down(x.hi(), p), detail::pow_up(x.lo(), p)};
  // Straddles zero: minimum of the even power is exactly 0.
  const double m = std::max(-x.lo(), x.hi());
  return {0.0, detail::pow_up(m, p)};
}

double width(const Interval& x) {
  if (x.lo() == x.hi()) return 0.0;
  return sub_up(x.hi(), x.lo());
}

double midpoint(const Interval& x) {
  if (!x.is_bounded())
    throw DomainError("midpoint of an unbounded interval is undefined");
  double s = x.lo() + x.hi();
  double m = std::isinf(s) ? x.lo() / 2 + x.hi() / 2 : s / 2;
  return std::min(std::max(m, x.lo()), x.hi());
}

bool contains(const Interval& x, double v) {
  return x.lo() <= v && v <= x.hi();
}

bool subset(const Interval& x, const Interval& y) {
  return y.lo() <= x.lo() && x.hi() <= y.hi();
}

}  // namespace ivsim
