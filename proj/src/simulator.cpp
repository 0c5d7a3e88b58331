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

#include "ivsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "ivsim/errors.hpp"

namespace ivsim {

InputSignal InputSignal::zero() { return {}; }

InputSignal InputSignal::constant(DecimalLiteral value) {
  InputSignal s;
  s.kind = Kind::constant;
  s.value = std::move(value);
  return s;
}

InputSignal InputSignal::step(DecimalLiteral amplitude, long start) {
  InputSignal s;
  s.kind = Kind::step;
  s.value = std::move(amplitude);
  s.start = start;
  return s;
}

InputSignal InputSignal::sequence(std::vector<DecimalLiteral> values) {
  InputSignal s;
  s.kind = Kind::sequence;
  s.values = std::move(values);
  return s;
}

InputSignal InputSignal::parse_spec(const std::string& spec) {
  try {
    if (spec == "zero") return zero();
    if (spec.rfind("const:", 0) == 0)
      return constant(DecimalLiteral::parse(spec.substr(6)));
    if (spec.rfind("step:", 0) == 0) {
      std::string rest = spec.substr(5);
      std::size_t colon = rest.rfind(':');
      if (colon == std::string::npos)
        throw ConfigError("input spec: expected step:<amplitude>:<start>");
      DecimalLiteral amp = DecimalLiteral::parse(rest.substr(0, colon));
      long start = std::stol(rest.substr(colon + 1));
      return step(std::move(amp), start);
    }
    if (spec.rfind("file:", 0) == 0) {
      std::ifstream in(spec.substr(5));
      if (!in) throw ConfigError("input spec: cannot open " + spec.substr(5));
      std::vector<DecimalLiteral> values;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        values.push_back(DecimalLiteral::parse(line));
      }
      return sequence(std::move(values));
    }
  } catch (const ParseError& e) {
    throw ConfigError("input spec: " + std::string(e.what()));
  } catch (const std::logic_error&) {
    throw ConfigError("input spec: bad step start index in '" + spec + "'");
  }
  throw ConfigError("unknown input spec '" + spec +
                    "' (expected zero, const:<v>, step:<amp>:<start> or "
                    "file:<path>)");
}

DecimalLiteral input_at(const InputSignal& s, long k) {
  if (k < 1) throw EvalError("input index must be >= 1");
  switch (s.kind) {
    case InputSignal::Kind::zero:
      return DecimalLiteral::parse("0");
    case InputSignal::Kind::constant:
      return s.value;
    case InputSignal::Kind::step:
      return k >= s.start ? s.value : DecimalLiteral::parse("0");
    case InputSignal::Kind::sequence:
      if (k > static_cast<long>(s.values.size()))
        throw EvalError("input sequence has no value at index " +
                        std::to_string(k));
      return s.values[static_cast<std::size_t>(k - 1)];
  }
  return DecimalLiteral::parse("0");
}

namespace {

void validate(const SimulationConfig& cfg) {
  if (cfg.horizon < 1) throw ConfigError("horizon N must be >= 1");
  if (cfg.horizon < cfg.model.max_lag())
    throw ConfigError("horizon N must be >= the model's maximum lag (" +
                      std::to_string(cfg.model.max_lag()) + ")");
}

// Step evaluator with optional monotone endpoint refinement. The
// refinement needs point-valued constants, so it is limited to
// degenerate-nearest mode and single-reference models.
class StepEvaluator {
 public:
  StepEvaluator(const SimulationConfig& cfg)
      : model_(cfg.model), mode_(cfg.mode) {
    if (cfg.extension == Extension::monotone_refined &&
        cfg.mode == EnclosureMode::degenerate_nearest &&
        cfg.model.signal_refs.size() == 1) {
      ref_ = cfg.model.signal_refs.front();
      Model d;
      d.expression = differentiate(*model_.expression, *ref_);
      d.signal_refs = model_.signal_refs;
      derivative_ = std::move(d);
    }
  }

  Interval operator()(const IntervalHistory& h) const {
    if (!ref_) return eval_interval(model_, h, mode_);
    Interval slope = Interval::point(0);
    try {
      slope = eval_interval(derivative_, h, mode_);
    } catch (const EvalError&) {
      return eval_interval(model_, h, mode_);  // cannot certify monotonicity
    }
    if (contains(slope, 0.0)) return eval_interval(model_, h, mode_);
    const Interval& x = ref_interval(h);
    Interval at_lo = eval_interval(model_, with_ref(h, Interval::point(x.lo())), mode_);
    Interval at_hi = eval_interval(model_, with_ref(h, Interval::point(x.hi())), mode_);
    return {std::min(at_lo.lo(), at_hi.lo()), std::max(at_lo.hi(), at_hi.hi())};
  }

 private:
  const Interval& ref_interval(const IntervalHistory& h) const {
    const auto& series = ref_->signal == Signal::output  ? h.y
                         : ref_->signal == Signal::input ? h.u
                                                         : h.e;
    return series.at(ref_->lag);
  }

  IntervalHistory with_ref(IntervalHistory h, const Interval& v) const {
    auto& series = ref_->signal == Signal::output  ? h.y
                   : ref_->signal == Signal::input ? h.u
                                                   : h.e;
    series.insert_or_assign(ref_->lag, v);
    return h;
  }

  const Model& model_;
  EnclosureMode mode_;
  std::optional<SignalRef> ref_;
  Model derivative_;
};

}  // namespace

std::vector<OrbitPoint> run_interval(const SimulationConfig& cfg) {
  validate(cfg);
  const long lag = cfg.model.max_lag();
  const long n = cfg.horizon;
  const Interval init = from_decimal(cfg.initial_output, cfg.mode);
  const StepEvaluator step(cfg);

  std::vector<Interval> orbit(static_cast<std::size_t>(n) + 1,
                              Interval::point(0));
  for (long i = 1; i <= std::min(lag, n); ++i)
    orbit[static_cast<std::size_t>(i)] = init;

  for (long k = lag + 1; k <= n; ++k) {
    IntervalHistory h;
    try {
      for (const SignalRef& r : cfg.model.signal_refs) {
        switch (r.signal) {
          case Signal::output:
            h.y.emplace(r.lag, orbit[static_cast<std::size_t>(k - r.lag)]);
            break;
          case Signal::input:
            // Inputs and noise enter as degenerate enclosures of the
            // generated values.
            h.u.emplace(r.lag,
                        from_decimal(input_at(cfg.input, k - r.lag),
                                     EnclosureMode::degenerate_nearest));
            break;
          case Signal::noise:
            h.e.emplace(r.lag,
                        from_decimal(input_at(cfg.noise, k - r.lag),
                                     EnclosureMode::degenerate_nearest));
            break;
        }
      }
      orbit[static_cast<std::size_t>(k)] = step(h);
    } catch (const EvalError& e) {
      if (e.step() >= 0) throw;
      throw EvalError(e.what(), k);
    }
  }

  std::vector<OrbitPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    const Interval& iv = orbit[static_cast<std::size_t>(i)];
    OrbitPoint p;
    p.n = i;
    p.enclosure = iv;
    p.width = width(iv);
    p.midpoint = iv.is_bounded()
                     ? midpoint(iv)
                     : std::numeric_limits<double>::quiet_NaN();
    points.push_back(p);
  }
  return points;
}

std::vector<double> run_point(const SimulationConfig& cfg) {
  validate(cfg);
  const long lag = cfg.model.max_lag();
  const long n = cfg.horizon;
  const double init = cfg.initial_output.to_double_nearest();

  std::vector<double> orbit(static_cast<std::size_t>(n) + 1, 0.0);
  for (long i = 1; i <= std::min(lag, n); ++i)
    orbit[static_cast<std::size_t>(i)] = init;

  for (long k = lag + 1; k <= n; ++k) {
    PointHistory h;
    try {
      for (const SignalRef& r : cfg.model.signal_refs) {
        switch (r.signal) {
          case Signal::output:
            h.y.emplace(r.lag, orbit[static_cast<std::size_t>(k - r.lag)]);
            break;
          case Signal::input:
            h.u.emplace(r.lag,
                        input_at(cfg.input, k - r.lag).to_double_nearest());
            break;
          case Signal::noise:
            h.e.emplace(r.lag,
                        input_at(cfg.noise, k - r.lag).to_double_nearest());
            break;
        }
      }
      orbit[static_cast<std::size_t>(k)] = eval_point(cfg.model, h);
    } catch (const EvalError& e) {
      if (e.step() >= 0) throw;
      throw EvalError(e.what(), k);
    }
  }
  orbit.erase(orbit.begin());
  return orbit;
}

std::optional<long> divergence_index(std::span<const double> a,
                                     std::span<const double> b,
                                     double threshold) {
  if (a.size() != b.size())
    throw Error("divergence_index: sequences have different lengths");
  if (!(threshold >= 0))
    throw Error("divergence_index: threshold must be >= 0");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > threshold) return static_cast<long>(i + 1);
  }
  return std::nullopt;
}

}  // namespace ivsim
