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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ivsim/interval.hpp"

namespace ivsim {

// Which lagged series a term refers to: output y, exogenous input u, or
// noise e.
enum class Signal { output, input, noise };

char signal_letter(Signal s);

struct SignalRef {
  Signal signal;
  int lag;  // >= 1; models use only past values

  friend auto operator<=>(const SignalRef&, const SignalRef&) = default;
};

enum class ExprKind {
  constant,
  signal,
  negate,
  add,
  subtract,
  multiply,
  divide,
  power,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One node of a parsed right-hand side. The tree keeps the association
// order exactly as written: products are not re-associated, so
// 2.6868*x - 0.2462*x^3 and 2.6868*x - (0.2462*x)*x^2 are distinct trees
// (they are different natural extensions of the same function).
struct Expr {
  ExprKind kind;
  DecimalLiteral literal;       // constant
  SignalRef signal{};           // signal
  ExprPtr left, right;          // negate uses left only
  long exponent = 0;            // power
};

ExprPtr make_constant(DecimalLiteral value);
ExprPtr make_signal(Signal s, int lag);
ExprPtr make_negate(ExprPtr child);
ExprPtr make_binary(ExprKind op, ExprPtr left, ExprPtr right);
ExprPtr make_power(ExprPtr base, long exponent);

bool expr_equal(const Expr& a, const Expr& b);

// Minimal-parenthesis rendering; reparsing yields the same tree
// node-for-node.
std::string to_string(const Expr& e);

// Partial derivative of the expression with respect to one signal
// reference, by the usual polynomial rules. No simplification beyond
// dropping trivial zero/one factors.
ExprPtr differentiate(const Expr& e, const SignalRef& ref);

// A named difference-equation model "y(k) = <expr>" with its derived
// maximum lags and nonlinearity degree.
struct Model {
  std::string name;
  ExprPtr expression;
  int max_lag_y = 0;
  int max_lag_u = 0;
  int max_lag_e = 0;
  int degree = 0;  // max total signal power along any product chain
  std::vector<SignalRef> signal_refs;  // distinct, sorted

  int max_lag() const;
};

// Grammar (standard precedence, '^' over unary '-' over '*' '/' over
// '+' '-'; '*' and '/' left-associative; multiplication must be explicit):
//
//   model   := "y" "(" "k" ")" "=" expr
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' integer)?
//   atom    := decimal | signal | '(' expr ')'
//   signal  := ('y'|'u'|'e') '(' 'k' '-' integer ')'
//
// Throws ParseError with the 1-based position on syntax errors; lag < 1 or
// a non-positive-integer exponent is a semantic error.
Model parse_model(std::string_view source, std::string name = "");

std::string print_model(const Model& m);

// Reads a model from file contents: '#' starts a comment, the first
// non-blank line is the statement.
Model parse_model_file(std::string_view contents, std::string name = "");

struct PointHistory {
  std::map<int, double> y, u, e;
};

struct IntervalHistory {
  std::map<int, Interval> y, u, e;
};

// Tree-walk evaluation in round-to-nearest binary64 honoring the stored
// association order; powers are evaluated by left-to-right repeated
// multiplication. Throws EvalError on missing history or division by zero.
double eval_point(const Model& m, const PointHistory& history);

// Natural interval extension: every operation of the tree replaced by its
// outward-rounded interval counterpart, constants converted under `mode`.
// The result contains eval_point for every choice of points from the
// history intervals.
Interval eval_interval(const Model& m, const IntervalHistory& history,
                       EnclosureMode mode);

}  // namespace ivsim
