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

#include "ivsim/decimal.hpp"

namespace ivsim {

// How a decimal constant becomes an interval.
enum class EnclosureMode {
  // [largest binary64 <= value, smallest binary64 >= value]; width is one
  // ulp unless the value is exactly representable.
  tight_enclosure,
  // Degenerate interval at the round-to-nearest binary64, reproducing the
  // effect of assigning a parsed literal to both endpoints.
  degenerate_nearest,
};

// A closed interval with binary64 endpoints. Arithmetic rounds endpoints
// outward, so the result always contains the exact real-arithmetic result
// set. Endpoints may be infinite (unbounded enclosures after overflow) but
// never NaN; negative zero is normalized to +0 at construction.
class Interval {
 public:
  // Throws DomainError unless lo <= hi (rejects NaN endpoints).
  Interval(double lo, double hi);

  // Degenerate interval [x, x]. Throws DomainError for NaN.
  static Interval point(double x);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool is_degenerate() const { return lo_ == hi_; }
  bool is_bounded() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  double lo_;
  double hi_;
};

// Decimal-to-interval conversion under the chosen mode. In
// degenerate_nearest mode a value beyond the finite binary64 range is a
// DomainError; in tight_enclosure mode the overflowing side saturates to
// infinity.
Interval from_decimal(const DecimalLiteral& d, EnclosureMode mode);
Interval from_decimal(std::string_view text, EnclosureMode mode);

Interval add(const Interval& x, const Interval& y);
Interval sub(const Interval& x, const Interval& y);
Interval mul(const Interval& x, const Interval& y);

// Throws DomainError when 0 is contained in y (the quotient set is
// unbounded).
Interval div(const Interval& x, const Interval& y);

// Tight power rule (monotone for odd p, via |x| extremes for even p; in
// particular 0 in x gives result.lo == 0 for even p). p >= 1, otherwise
// DomainError.
Interval pow_int(const Interval& x, long p);

// hi - lo rounded toward +inf; never under-reports the enclosure size.
double width(const Interval& x);

// (lo + hi) / 2 rounded to nearest, clamped into the interval. Throws
// DomainError for unbounded intervals.
double midpoint(const Interval& x);

bool contains(const Interval& x, double v);
bool subset(const Interval& x, const Interval& y);  // x inside y

inline Interval operator+(const Interval& x, const Interval& y) { return add(x, y); }
inline Interval operator-(const Interval& x, const Interval& y) { return sub(x, y); }
inline Interval operator*(const Interval& x, const Interval& y) { return mul(x, y); }
inline Interval operator/(const Interval& x, const Interval& y) { return div(x, y); }
inline Interval operator-(const Interval& x) { return {-x.hi(), -x.lo()}; }

}  // namespace ivsim
