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

#include <string>
#include <string_view>

namespace ivsim {

// An exact decimal number: sign, digit string, optional fraction and
// exponent ("0.1", "-3.99e-2"). Kept in exact form so the decision of how
// to round into binary64 (nearest, downward, upward) is made explicitly
// at the point of use, not at parse time.
class DecimalLiteral {
 public:
  DecimalLiteral() = default;  // zero

  // Throws ParseError on malformed input.
  static DecimalLiteral parse(std::string_view text);

  // Value as written, normalized: value == (-1)^negative * digits * 10^exp10,
  // digits without leading/trailing zeros ("0" exactly for zero).
  bool negative() const { return negative_; }
  const std::string& digits() const { return digits_; }
  int exp10() const { return exp10_; }
  bool is_zero() const { return digits_ == "0"; }

  // Original spelling, trimmed. Reparsing it yields an equal value.
  const std::string& text() const { return text_; }

  // Exact three-way comparison of the decimal value against a finite
  // binary64 value: -1, 0, +1 for less, equal, greater.
  int compare_to_double(double v) const;

  // Correctly rounded conversions.
  double to_double_nearest() const;
  double to_double_down() const;  // largest binary64 <= value
  double to_double_up() const;    // smallest binary64 >= value

  friend bool operator==(const DecimalLiteral& a, const DecimalLiteral& b) {
    return a.negative_ == b.negative_ && a.digits_ == b.digits_ &&
           (a.is_zero() || a.exp10_ == b.exp10_);
  }

 private:
  int compare_magnitude(double v) const;

  bool negative_ = false;
  std::string digits_ = "0";
  int exp10_ = 0;
  std::string text_ = "0";
};

}  // namespace ivsim
