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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivsim/model.hpp"

namespace ivsim {

// Exogenous input (or noise) sequence, defined for every time index k >= 1.
struct InputSignal {
  enum class Kind { zero, constant, step, sequence };

  Kind kind = Kind::zero;
  DecimalLiteral value;                 // constant value / step amplitude
  long start = 1;                       // first index at which a step is on
  std::vector<DecimalLiteral> values;   // sequence entries, 1-based

  static InputSignal zero();
  static InputSignal constant(DecimalLiteral value);
  static InputSignal step(DecimalLiteral amplitude, long start);
  static InputSignal sequence(std::vector<DecimalLiteral> values);

  // Mini-syntax used by the CLI and the Python bindings:
  //   "zero" | "const:<v>" | "step:<amplitude>:<start>" | "file:<path>"
  // (a file holds one decimal per line). Throws ConfigError.
  static InputSignal parse_spec(const std::string& spec);
};

// Value at index k (>= 1). Sequences throw EvalError past their end.
DecimalLiteral input_at(const InputSignal& s, long k);

// Which interval extension the simulator iterates.
enum class Extension {
  // Natural extension: every tree operation replaced by its interval
  // counterpart. Always sound; overestimates when a signal occurs more
  // than once in the expression (dependency problem).
  natural,
  // Natural extension refined by monotone endpoint images: when the model
  // has a single distinct signal reference and the interval evaluation of
  // the symbolic derivative excludes zero, the step image is the hull of
  // the two outward-rounded endpoint evaluations, which removes the
  // dependency overestimation. Falls back to the natural extension
  // whenever monotonicity cannot be certified, so it is sound
  // unconditionally. Only takes effect in degenerate-nearest mode.
  monotone_refined,
};

struct SimulationConfig {
  Model model;
  long horizon = 0;                 // N; indices run 1..N
  DecimalLiteral initial_output;    // replicated across output lag slots
  InputSignal input;                // defaults to zero
  InputSignal noise;                // defaults to zero
  EnclosureMode mode = EnclosureMode::degenerate_nearest;
  Extension extension = Extension::natural;
};

struct OrbitPoint {
  long n = 0;
  Interval enclosure{0, 0};
  double width = 0;
  double midpoint = 0;  // NaN when the enclosure is unbounded
};

// Iterates the model forward. Indices 1..max_lag hold the initial
// enclosure; the first computed value lands at max_lag + 1. Every exactly
// representable point orbit started inside the initial enclosures is
// contained pointwise. Throws ConfigError for invalid configs and
// EvalError (with the failing index) on evaluation failure.
std::vector<OrbitPoint> run_interval(const SimulationConfig& cfg);

// Plain binary64 orbit of the same system (round-to-nearest throughout).
std::vector<double> run_point(const SimulationConfig& cfg);

// Smallest 1-based index with |a[i] - b[i]| > threshold, if any.
// Sequences must have equal length; threshold must be >= 0.
std::optional<long> divergence_index(std::span<const double> a,
                                     std::span<const double> b,
                                     double threshold);

}  // namespace ivsim
