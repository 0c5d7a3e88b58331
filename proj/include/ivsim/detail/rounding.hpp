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

#include <cmath>
#include <limits>

#include "ivsim/detail/bigint.hpp"

// Directed-rounded scalar arithmetic built on round-to-nearest plus exact
// residuals, so no global rounding-mode switching is involved and the
// functions are safe under concurrency:
//
//  - add/sub: the rounding error of a float addition is itself a float
//    (TwoSum), so the residual sign gives the correctly rounded directed
//    result in all finite cases.
//  - mul/div: fma recovers the exact residual while the result magnitude
//    stays above 2^-967; below that the residual may be inexact and the
//    result is nudged outward by one ulp instead.
//  - pow: the mantissa is powered in exact integer arithmetic and rounded
//    once in the requested direction.
//
// All functions saturate overflow toward the rounding direction (DBL_MAX
// when rounding toward zero, infinity when rounding away) so interval
// endpoints stay sound, and map the indeterminate endpoint products
// 0 * inf to 0 (the convention for endpoint-wise interval formulas).

namespace ivsim::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kMaxDouble = std::numeric_limits<double>::max();
inline constexpr double kMinDenorm = std::numeric_limits<double>::denorm_min();

// Below this magnitude an fma-computed residual may itself underflow, so
// exactness can no longer be certified. 2^-967.
inline constexpr double kResidualSafe = 0x1p-967;

inline double next_up(double x) { return std::nextafter(x, kInf); }
inline double next_down(double x) { return std::nextafter(x, -kInf); }

// Knuth TwoSum: exact residual of fl(a + b) for finite results.
inline double two_sum_residual(double a, double b, double s) {
  double bv = s - a;
  double av = s - bv;
  double br = b - bv;
  double ar = a - av;
  return ar + br;
}

inline double add_down(double a, double b) {
  double s = a + b;
  if (std::isnan(s)) return -kInf;  // opposite infinities
  if (std::isinf(s)) {
    if (std::isinf(a) || std::isinf(b)) return s;
    return s > 0 ? kMaxDouble : s;
  }
  return two_sum_residual(a, b, s) < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  double s = a + b;
  if (std::isnan(s)) return kInf;
  if (std::isinf(s)) {
    if (std::isinf(a) || std::isinf(b)) return s;
    return s > 0 ? s : -kMaxDouble;
  }
  return two_sum_residual(a, b, s) > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  double p = a * b;
  if (std::isnan(p)) return (a == 0 || b == 0) ? 0.0 : -kInf;
  if (std::isinf(p)) {
    if (std::isinf(a) || std::isinf(b)) return p;
    return p > 0 ? kMaxDouble : p;
  }
  if (p == 0) {
    if (a == 0 || b == 0) return 0.0;
    return (std::signbit(a) == std::signbit(b)) ? 0.0 : -kMinDenorm;
  }
  if (std::fabs(p) >= kResidualSafe)
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
  return next_down(p);
}

inline double mul_up(double a, double b) {
  double p = a * b;
  if (std::isnan(p)) return (a == 0 || b == 0) ? 0.0 : kInf;
  if (std::isinf(p)) {
    if (std::isinf(a) || std::isinf(b)) return p;
    return p > 0 ? p : -kMaxDouble;
  }
  if (p == 0) {
    if (a == 0 || b == 0) return 0.0;
    return (std::signbit(a) == std::signbit(b)) ? kMinDenorm : 0.0;
  }
  if (std::fabs(p) >= kResidualSafe)
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
  return next_up(p);
}

// Quotient residual: true(a/b) - q has the sign of (a - q*b)/b, and
// fma(q, b, -a) = q*b - a exactly while |a| stays out of the danger zone.
inline double div_down(double a, double b) {
  double q = a / b;
  if (std::isnan(q)) return -kInf;  // inf/inf endpoint combinations
  if (std::isinf(q)) {
    if (std::isinf(a)) return q;
    return q > 0 ? kMaxDouble : q;
  }
  if (q == 0) {
    if (a == 0) return 0.0;
    return (std::signbit(a) == std::signbit(b)) ? 0.0 : -kMinDenorm;
  }
  if (std::isinf(b)) return q;  // finite/inf is exact zero, handled above
  if (std::fabs(a) >= kResidualSafe && std::fabs(q) >= kResidualSafe) {
    double r = std::fma(q, b, -a);
    if (r == 0) return q;
    bool err_negative = (b > 0) ? (r > 0) : (r < 0);
    return err_negative ? next_down(q) : q;
  }
  return next_down(q);
}

inline double div_up(double a, double b) {
  double q = a / b;
  if (std::isnan(q)) return kInf;
  if (std::isinf(q)) {
    if (std::isinf(a)) return q;
    return q > 0 ? q : -kMaxDouble;
  }
  if (q == 0) {
    if (a == 0) return 0.0;
    return (std::signbit(a) == std::signbit(b)) ? kMinDenorm : 0.0;
  }
  if (std::isinf(b)) return q;
  if (std::fabs(a) >= kResidualSafe && std::fabs(q) >= kResidualSafe) {
    double r = std::fma(q, b, -a);
    if (r == 0) return q;
    bool err_positive = (b > 0) ? (r < 0) : (r > 0);
    return err_positive ? next_up(q) : q;
  }
  return next_up(q);
}

// |x|^p rounded toward +inf (round_up) or toward zero. Exact single
// rounding via integer mantissa powers up to the bit-size cap, then a
// directed multiplication chain (at most p-1 extra ulps outward).
double pow_magnitude(double magnitude, long p, bool round_up);

// x^p rounded toward -inf / +inf. p >= 1.
inline double pow_down(double x, long p) {
  if (x == 0) return 0.0;
  bool negative = x < 0 && (p % 2 != 0);
  double mag = pow_magnitude(std::fabs(x), p, negative);
  return negative ? -mag : mag;
}

inline double pow_up(double x, long p) {
  if (x == 0) return 0.0;
  bool negative = x < 0 && (p % 2 != 0);
  double mag = pow_magnitude(std::fabs(x), p, !negative);
  return negative ? -mag : mag;
}

}  // namespace ivsim::detail
