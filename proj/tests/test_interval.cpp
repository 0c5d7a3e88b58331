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

#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "ivsim/errors.hpp"
#include "ivsim/interval.hpp"
#include "rational_oracle.hpp"

using ivsim::contains;
using ivsim::EnclosureMode;
using ivsim::from_decimal;
using ivsim::Interval;
using ivsim::midpoint;
using ivsim::pow_int;
using ivsim::subset;
using ivsim::width;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double random_endpoint(std::mt19937_64& rng) {
  // Mixed magnitudes around 1, occasionally large or tiny, and exact
  // small integers now and then.
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> small(-8, 8);
  std::uniform_int_distribution<int> exp(-40, 40);
  switch (kind(rng)) {
    case 0: return small(rng);
    case 1: return std::ldexp(unit(rng), exp(rng) * 6);
    default: return std::ldexp(unit(rng), exp(rng) / 4);
  }
}

Interval random_interval(std::mt19937_64& rng) {
  double a = random_endpoint(rng), b = random_endpoint(rng);
  return {std::min(a, b), std::max(a, b)};
}

Interval random_nonzero_interval(std::mt19937_64& rng) {
  for (;;) {
    Interval iv = random_interval(rng);
    if (!contains(iv, 0.0)) return iv;
  }
}

// Exact rational sample points of an interval: endpoints and the binary64
// midpoint (all exactly representable).
std::vector<double> sample_points(const Interval& iv) {
  return {iv.lo(), iv.hi(), midpoint(iv)};
}

void check_op_containment(
    const Interval& x, const Interval& y, const Interval& result,
    const std::function<mpq_class(const mpq_class&, const mpq_class&)>& op) {
  for (double px : sample_points(x)) {
    for (double py : sample_points(y)) {
      mpq_class exact = op(oracle::rat_of_double(px), oracle::rat_of_double(py));
      CAPTURE(px);
      CAPTURE(py);
      REQUIRE(oracle::contains(result, exact));
    }
  }
}

// Correctly rounded directed results from the oracle; outward-rounded
// endpoints must land on them or at most one ulp outside.
void check_tightness(double computed, const mpq_class& exact, bool is_lower) {
  if (is_lower) {
    double correct = oracle::double_down(exact);
    bool ok = computed == correct ||
              computed == std::nextafter(correct, -kInf);
    CHECK(ok);
  } else {
    double correct = oracle::double_up(exact);
    bool ok = computed == correct || computed == std::nextafter(correct, kInf);
    CHECK(ok);
  }
}

}  // namespace

TEST_CASE("interval construction") {
  Interval iv(1.0, 2.0);
  CHECK(iv.lo() == 1.0);
  CHECK(iv.hi() == 2.0);
  CHECK(Interval::point(0.5).is_degenerate());
  CHECK_THROWS_AS(Interval(2.0, 1.0), ivsim::DomainError);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), ivsim::DomainError);
  CHECK_THROWS_AS(Interval::point(std::nan("")), ivsim::DomainError);

  // negative zero normalizes to +0 so equality tests are stable
  Interval z(-0.0, -0.0);
  CHECK_FALSE(std::signbit(z.lo()));
  CHECK_FALSE(std::signbit(z.hi()));
  CHECK(z == Interval(0.0, 0.0));

  // infinite endpoints are allowed, NaN is not
  CHECK(Interval(-kInf, 3.0).lo() == -kInf);
}

TEST_CASE("from_decimal") {
  CHECK(from_decimal("0.5", EnclosureMode::degenerate_nearest) ==
        Interval(0.5, 0.5));
  CHECK(width(from_decimal("0.5", EnclosureMode::degenerate_nearest)) == 0.0);
  CHECK(width(from_decimal("0.5", EnclosureMode::tight_enclosure)) == 0.0);

  // "0.2" is inexact: the degenerate-nearest interval still has width 0
  Interval d2 = from_decimal("0.2", EnclosureMode::degenerate_nearest);
  CHECK(width(d2) == 0.0);
  CHECK(midpoint(d2) == 0.2);

  // tight enclosure of 0.1 brackets the exact rational 1/10 at one ulp
  Interval t = from_decimal("0.1", EnclosureMode::tight_enclosure);
  mpq_class tenth(1, 10);
  CHECK(oracle::contains(t, tenth));
  CHECK(oracle::rat_of_double(t.lo()) < tenth);
  CHECK(tenth < oracle::rat_of_double(t.hi()));
  CHECK(t.hi() == std::nextafter(t.lo(), kInf));

  CHECK_THROWS_AS(from_decimal("zzz", EnclosureMode::tight_enclosure),
                  ivsim::ParseError);
  CHECK_THROWS_AS(from_decimal("1e400", EnclosureMode::degenerate_nearest),
                  ivsim::DomainError);
  Interval huge = from_decimal("1e400", EnclosureMode::tight_enclosure);
  CHECK(huge.lo() == std::numeric_limits<double>::max());
  CHECK(huge.hi() == kInf);
}

TEST_CASE("add/sub on exact operands") {
  CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
  CHECK(Interval(3, 4) - Interval(1, 2) == Interval(1, 3));

  std::mt19937_64 rng(20260301);
  for (int i = 0; i < 200; ++i) {
    Interval x = random_interval(rng);
    CHECK(x + Interval(0, 0) == x);
    CHECK(x - Interval(0, 0) == x);
  }
}

TEST_CASE("worked decimal example: enclosures of 0.1..0.3 and 0.3..0.35") {
  Interval x(from_decimal("0.1", EnclosureMode::tight_enclosure).lo(),
             from_decimal("0.3", EnclosureMode::tight_enclosure).hi());
  Interval y(from_decimal("0.3", EnclosureMode::tight_enclosure).lo(),
             from_decimal("0.35", EnclosureMode::tight_enclosure).hi());

  Interval sum = x + y;
  CHECK(oracle::contains(sum, mpq_class(4, 10)));
  CHECK(oracle::contains(sum, mpq_class(65, 100)));
  check_tightness(sum.lo(),
                  oracle::rat_of_double(x.lo()) + oracle::rat_of_double(y.lo()),
                  true);
  check_tightness(sum.hi(),
                  oracle::rat_of_double(x.hi()) + oracle::rat_of_double(y.hi()),
                  false);

  // the exact real range of x - y is [-0.25, 0]; the enclosure must
  // contain it, in particular the upper endpoint cannot be negative
  Interval diff = x - y;
  CHECK(oracle::contains(diff, mpq_class(-25, 100)));
  CHECK(oracle::contains(diff, mpq_class(0)));
  CHECK(diff.hi() >= 0.0);
}

TEST_CASE("mul examples") {
  CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
  CHECK(Interval(2, 3) * Interval(-5, -4) == Interval(-15, -8));
}

TEST_CASE("div examples") {
  CHECK(Interval(1, 2) / Interval(4, 8) == Interval(0.125, 0.5));
  CHECK(Interval(6, 6) / Interval(3, 3) == Interval(2, 2));
  CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), ivsim::DomainError);
  CHECK_THROWS_AS(Interval(1, 2) / Interval(0, 4), ivsim::DomainError);
  CHECK_THROWS_AS(Interval(1, 2) / Interval(-4, 0), ivsim::DomainError);
}

TEST_CASE("pow_int") {
  CHECK(pow_int(Interval(-2, 3), 3) == Interval(-8, 27));
  CHECK(pow_int(Interval(-2, 3), 2) == Interval(0, 9));
  CHECK(pow_int(Interval(-3, -2), 2) == Interval(4, 9));
  CHECK(pow_int(Interval(2, 3), 2) == Interval(4, 9));
  CHECK(pow_int(Interval(-3, -2), 3) == Interval(-27, -8));
  CHECK_THROWS_AS(pow_int(Interval(1, 2), 0), ivsim::DomainError);

  // cube of the nearest double to 0.1: at most 2 ulps wide around the
  // exact rational cube
  Interval c = pow_int(from_decimal("0.1", EnclosureMode::degenerate_nearest), 3);
  mpq_class exact = oracle::rat_pow(oracle::rat_of_double(0.1), 3);
  CHECK(oracle::contains(c, exact));
  CHECK(width(c) <= 2 * (std::nextafter(c.hi(), kInf) - c.hi()));
}

TEST_CASE("pow tightness against the oracle") {
  std::mt19937_64 rng(20260302);
  for (int i = 0; i < 300; ++i) {
    Interval x = random_interval(rng);
    for (long p : {2L, 3L, 5L, 8L}) {
      Interval r = pow_int(x, p);
      for (double px : sample_points(x)) {
        if (!std::isfinite(px)) continue;
        mpq_class exact = oracle::rat_pow(oracle::rat_of_double(px), p);
        CAPTURE(px);
        CAPTURE(p);
        REQUIRE(oracle::contains(r, exact));
      }
    }
  }
}

TEST_CASE("even powers of zero-straddling intervals have lo == 0") {
  std::mt19937_64 rng(20260303);
  for (int i = 0; i < 300; ++i) {
    Interval x = random_interval(rng);
    if (!contains(x, 0.0)) continue;
    CHECK(pow_int(x, 2).lo() == 0.0);
    CHECK(pow_int(x, 4).lo() == 0.0);
  }
}

TEST_CASE("width and midpoint") {
  CHECK(width(Interval(1, 1)) == 0.0);
  CHECK(width(Interval(-0.25, 0)) == 0.25);
  CHECK(midpoint(Interval(1, 3)) == 2.0);
  CHECK(midpoint(Interval(0.7, 0.7)) == 0.7);
  CHECK_THROWS_AS(midpoint(Interval(0, kInf)), ivsim::DomainError);
  CHECK(width(Interval(0, kInf)) == kInf);

  std::mt19937_64 rng(20260304);
  for (int i = 0; i < 500; ++i) {
    Interval x = random_interval(rng);
    double w = width(x);
    CHECK(w >= 0.0);
    CHECK((w == 0.0) == x.is_degenerate());
    // width never under-reports: hi - lo rounded toward +inf
    mpq_class exact =
        oracle::rat_of_double(x.hi()) - oracle::rat_of_double(x.lo());
    CHECK(oracle::rat_of_double(w) >= exact);
    double m = midpoint(x);
    CHECK(contains(x, m));
  }
}

TEST_CASE("contains and subset") {
  CHECK(contains(Interval(0, 1), 0.5));
  CHECK(contains(Interval(0, 1), 1.0));
  CHECK(contains(Interval(0, 1), 0.0));
  CHECK_FALSE(contains(Interval(0, 1), 1.0000001));
  CHECK(subset(Interval(1, 2), Interval(0, 3)));
  CHECK_FALSE(subset(Interval(0, 3), Interval(1, 2)));
  CHECK(subset(Interval(1, 2), Interval(1, 2)));
}

TEST_CASE("containment of exact arithmetic for all four operations") {
  std::mt19937_64 rng(20260305);
  for (int i = 0; i < 400; ++i) {
    Interval x = random_interval(rng);
    Interval y = random_interval(rng);
    if (!x.is_bounded() || !y.is_bounded()) continue;
    check_op_containment(x, y, x + y,
                         [](const mpq_class& a, const mpq_class& b) { return mpq_class(a + b); });
    check_op_containment(x, y, x - y,
                         [](const mpq_class& a, const mpq_class& b) { return mpq_class(a - b); });
    check_op_containment(x, y, x * y,
                         [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); });
    Interval yn = random_nonzero_interval(rng);
    if (yn.is_bounded())
      check_op_containment(x, yn, x / yn,
                           [](const mpq_class& a, const mpq_class& b) { return mpq_class(a / b); });
  }
}

TEST_CASE("1000 random products contain all exact endpoint products") {
  std::mt19937_64 rng(20260306);
  for (int i = 0; i < 1000; ++i) {
    Interval x = random_interval(rng);
    Interval y = random_interval(rng);
    if (!x.is_bounded() || !y.is_bounded()) continue;
    Interval r = x * y;
    for (double px : {x.lo(), x.hi()}) {
      for (double py : {y.lo(), y.hi()}) {
        mpq_class exact =
            oracle::rat_of_double(px) * oracle::rat_of_double(py);
        REQUIRE(oracle::contains(r, exact));
      }
    }
  }
}

TEST_CASE("inclusion isotonicity") {
  std::mt19937_64 rng(20260307);
  std::uniform_real_distribution<double> frac(0.0, 0.49);
  auto shrink = [&](const Interval& iv) {
    if (iv.is_degenerate() || !iv.is_bounded()) return iv;
    double w = iv.hi() - iv.lo();
    double lo = iv.lo() + frac(rng) * w;
    double hi = iv.hi() - frac(rng) * w;
    return lo <= hi ? Interval(lo, hi) : Interval(iv.lo(), iv.hi());
  };
  for (int i = 0; i < 500; ++i) {
    Interval x_outer = random_interval(rng);
    Interval y_outer = random_interval(rng);
    Interval x = shrink(x_outer);
    Interval y = shrink(y_outer);
    CHECK(subset(x + y, x_outer + y_outer));
    CHECK(subset(x - y, x_outer - y_outer));
    CHECK(subset(x * y, x_outer * y_outer));
    if (!contains(y_outer, 0.0)) CHECK(subset(x / y, x_outer / y_outer));
    CHECK(subset(pow_int(x, 3), pow_int(x_outer, 3)));
    CHECK(subset(pow_int(x, 2), pow_int(x_outer, 2)));
  }
}

TEST_CASE("endpoints are within one ulp of the correctly rounded directed results") {
  std::mt19937_64 rng(20260308);
  for (int i = 0; i < 400; ++i) {
    Interval x = random_interval(rng);
    Interval y = random_interval(rng);
    if (!x.is_bounded() || !y.is_bounded()) continue;
    mpq_class xlo = oracle::rat_of_double(x.lo()), xhi = oracle::rat_of_double(x.hi());
    mpq_class ylo = oracle::rat_of_double(y.lo()), yhi = oracle::rat_of_double(y.hi());

    Interval s = x + y;
    check_tightness(s.lo(), mpq_class(xlo + ylo), true);
    check_tightness(s.hi(), mpq_class(xhi + yhi), false);

    Interval d = x - y;
    check_tightness(d.lo(), mpq_class(xlo - yhi), true);
    check_tightness(d.hi(), mpq_class(xhi - ylo), false);

    Interval p = x * y;
    mpq_class cands[4] = {mpq_class(xlo * ylo), mpq_class(xlo * yhi),
                          mpq_class(xhi * ylo), mpq_class(xhi * yhi)};
    mpq_class pmin = cands[0], pmax = cands[0];
    for (const mpq_class& c : cands) {
      if (c < pmin) pmin = c;
      if (c > pmax) pmax = c;
    }
    check_tightness(p.lo(), pmin, true);
    check_tightness(p.hi(), pmax, false);
  }
}

TEST_CASE("overflow saturates to infinite endpoints") {
  double m = std::numeric_limits<double>::max();
  Interval big(m, m);
  Interval r = big + big;
  CHECK(r.hi() == kInf);
  CHECK(r.lo() <= m);  // lower endpoint stays finite and below the sum
  CHECK(width(r) == kInf);
  CHECK_THROWS_AS(midpoint(r), ivsim::DomainError);

  Interval neg = -big - big;
  CHECK(neg.lo() == -kInf);
}
