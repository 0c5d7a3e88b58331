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

// Test-only exact-rational oracle built on GMP. Everything here is an
// independent route: exact rational arithmetic, its own decimal parsing
// and its own directed double conversions, so it can certify the library's
// outward-rounded results without sharing any code path with them.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ivsim/interval.hpp"
#include "ivsim/model.hpp"
#include "ivsim/simulator.hpp"

namespace oracle {

// Exact conversions.
mpq_class rat_of_double(double v);                    // v must be finite
mpq_class rat_of_decimal(const std::string& text);    // exact D*10^E

// Directed conversions of an exact rational into binary64.
double double_down(const mpq_class& q);   // largest double <= q
double double_up(const mpq_class& q);     // smallest double >= q
double double_nearest(const mpq_class& q);  // ties to even

// Exact containment of a rational in a binary64 interval.
bool contains(const ivsim::Interval& iv, const mpq_class& q);

// q^p for p >= 1.
mpq_class rat_pow(const mpq_class& q, long p);

// How decimal constants of a model enter the oracle arithmetic: as the
// binary64-nearest value (matching degenerate-nearest simulations) or as
// the exact decimal value (inside any tight enclosure).
enum class ConstantSemantics { nearest_double, exact_decimal };

struct RatHistory {
  std::map<int, mpq_class> y, u, e;
};

// Exact rational evaluation of a model expression (division by zero
// throws std::domain_error).
mpq_class eval_rat(const ivsim::Model& m, const RatHistory& history,
                   ConstantSemantics constants);

// Exact rational orbit of a point system: seeded with the binary64-nearest
// initial value and coefficients (nearest_double semantics, matching
// degenerate-nearest simulations) or with the exact decimal values
// (exact_decimal, a point system inside any tight enclosure). Feasible only
// while the representation stays desk-scale: nonlinear maps multiply the
// bit size by the degree at every step, so callers pick the horizon
// accordingly.
std::vector<mpq_class> exact_orbit(
    const ivsim::Model& m, const std::string& x0,
    const ivsim::InputSignal& input, long n,
    ConstantSemantics constants = ConstantSemantics::nearest_double);

// A rational interval: exact endpoints, outward compression between steps.
struct RatInterval {
  mpq_class lo, hi;
};

// Rigorous high-precision enclosure of the exact orbit: each step is
// evaluated in exact rational interval arithmetic, then both endpoints are
// rounded outward to frac_bits fractional bits (floor/ceil on 2^frac_bits
// grids), which caps the representation while preserving containment. With
// frac_bits ~ 512 the enclosure is astronomically tighter than any
// binary64 interval, so checking that it is a subset of the computed
// binary64 enclosure certifies that the exact orbit is contained too.
std::vector<RatInterval> enclosure_orbit(const ivsim::Model& m,
                                         const std::string& x0,
                                         const ivsim::InputSignal& input,
                                         long n, unsigned frac_bits);

}  // namespace oracle
