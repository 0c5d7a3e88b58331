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

#include <string>

#include "ivsim/errors.hpp"
#include "ivsim/model.hpp"

namespace ivsim {

namespace {

std::string ref_name(const SignalRef& r) {
  return std::string(1, signal_letter(r.signal)) + "(k-" +
         std::to_string(r.lag) + ")";
}

template <typename T>
const T& lookup(const std::map<int, T>& series, const SignalRef& r) {
  auto it = series.find(r.lag);
  if (it == series.end())
    throw EvalError("missing history for " + ref_name(r));
  return it->second;
}

double eval_point_node(const Expr& e, const PointHistory& h) {
  switch (e.kind) {
    case ExprKind::constant:
      return e.literal.to_double_nearest();
    case ExprKind::signal:
      switch (e.signal.signal) {
        case Signal::output: return lookup(h.y, e.signal);
        case Signal::input: return lookup(h.u, e.signal);
        case Signal::noise: return lookup(h.e, e.signal);
      }
      return 0;
    case ExprKind::negate:
      return -eval_point_node(*e.left, h);
    case ExprKind::add:
      return eval_point_node(*e.left, h) + eval_point_node(*e.right, h);
    case ExprKind::subtract:
      return eval_point_node(*e.left, h) - eval_point_node(*e.right, h);
    case ExprKind::multiply:
      return eval_point_node(*e.left, h) * eval_point_node(*e.right, h);
    case ExprKind::divide: {
      double num = eval_point_node(*e.left, h);
      double den = eval_point_node(*e.right, h);
      if (den == 0) throw EvalError("division by zero");
      return num / den;
    }
    case ExprKind::power: {
      // ((x*x)*x)...: reproducible across platforms, no library pow.
      double x = eval_point_node(*e.left, h);
      double acc = x;
      for (long i = 1; i < e.exponent; ++i) acc *= x;
      return acc;
    }
  }
  return 0;
}

Interval eval_interval_node(const Expr& e, const IntervalHistory& h,
                            EnclosureMode mode) {
  switch (e.kind) {
    case ExprKind::constant:
      return from_decimal(e.literal, mode);
    case ExprKind::signal:
      switch (e.signal.signal) {
        case Signal::output: return lookup(h.y, e.signal);
        case Signal::input: return lookup(h.u, e.signal);
        case Signal::noise: return lookup(h.e, e.signal);
      }
      return Interval::point(0);
    case ExprKind::negate:
      return -eval_interval_node(*e.left, h, mode);
    case ExprKind::add:
      return eval_interval_node(*e.left, h, mode) +
             eval_interval_node(*e.right, h, mode);
    case ExprKind::subtract:
      return eval_interval_node(*e.left, h, mode) -
             eval_interval_node(*e.right, h, mode);
    case ExprKind::multiply:
      return eval_interval_node(*e.left, h, mode) *
             eval_interval_node(*e.right, h, mode);
    case ExprKind::divide: {
      Interval num = eval_interval_node(*e.left, h, mode);
      Interval den = eval_interval_node(*e.right, h, mode);
      try {
        return num / den;
      } catch (const DomainError&) {
        throw EvalError("division by an interval containing zero");
      }
    }
    case ExprKind::power:
      return pow_int(eval_interval_node(*e.left, h, mode), e.exponent);
  }
  return Interval::point(0);
}

}  // namespace

double eval_point(const Model& m, const PointHistory& history) {
  return eval_point_node(*m.expression, history);
}

Interval eval_interval(const Model& m, const IntervalHistory& history,
                       EnclosureMode mode) {
  return eval_interval_node(*m.expression, history, mode);
}

}  // namespace ivsim
