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

#include <algorithm>
#include <cmath>

#include "ivsim/casebook.hpp"
#include "ivsim/errors.hpp"

namespace ivsim {

namespace {

double parsed(const std::string& s) {
  return DecimalLiteral::parse(s).to_double_nearest();
}

}  // namespace

double ReferenceRow::proposed_width_value() const { return parsed(proposed_width); }
double ReferenceRow::proposed_midpoint_value() const { return parsed(proposed_midpoint); }
double ReferenceRow::intlab_width_value() const { return parsed(intlab_width); }
double ReferenceRow::intlab_midpoint_value() const { return parsed(intlab_midpoint); }

RowComparison compare_row(const OrbitPoint& computed, const ReferenceRow& ref) {
  RowComparison c;
  const double pw = ref.proposed_width_value();
  const double iw = ref.intlab_width_value();
  const double pm = ref.proposed_midpoint_value();

  // <=, not <: with correct directed rounding exact rows can tie.
  c.width_le_intlab = computed.width <= iw;
  c.width_within_10x_proposed = computed.width <= 10 * pw;
  c.midpoint_abs_diff = std::fabs(computed.midpoint - pm);
  c.midpoint_agrees =
      c.midpoint_abs_diff <= std::max({computed.width, pw, 1e-12});
  c.width_vs_intlab = iw > 0 ? computed.width / iw : computed.width;
  return c;
}

SimulationConfig case_config(const CaseDescriptor& c, const std::string& x0) {
  SimulationConfig cfg;
  cfg.model = parse_model(c.model_text, c.id);
  cfg.horizon = c.horizon;
  cfg.initial_output = DecimalLiteral::parse(x0);
  cfg.input = InputSignal::parse_spec(c.input_spec);
  cfg.mode = EnclosureMode::degenerate_nearest;
  cfg.extension = c.extension;
  return cfg;
}

CaseReport run_case(const std::string& case_id, const std::string& x0) {
  const CaseDescriptor& c = find_case(case_id);
  if (std::find(c.initial_conditions.begin(), c.initial_conditions.end(),
                x0) == c.initial_conditions.end())
    throw ConfigError("case '" + case_id + "' has no initial condition " + x0);

  const std::vector<OrbitPoint> orbit = run_interval(case_config(c, x0));

  CaseReport report;
  for (long n : c.report_rows) {
    const OrbitPoint& p = orbit[static_cast<std::size_t>(n - 1)];
    CaseRow row;
    row.case_id = case_id;
    row.x0 = x0;
    row.n = n;
    row.computed_width = p.width;
    row.computed_midpoint = p.midpoint;
    row.ref = find_reference_row(case_id, x0, n);
    row.cmp = compare_row(p, row.ref);
    report.all_pass = report.all_pass && row.cmp.pass();
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

void append(CaseReport& into, CaseReport&& part) {
  into.all_pass = into.all_pass && part.all_pass;
  for (CaseRow& r : part.rows) into.rows.push_back(std::move(r));
}

}  // namespace

CaseReport run_case_all(const std::string& case_id) {
  const CaseDescriptor& c = find_case(case_id);
  CaseReport report;
  for (const std::string& x0 : c.initial_conditions)
    append(report, run_case(case_id, x0));
  return report;
}

CaseReport run_all_cases() {
  CaseReport report;
  for (const CaseDescriptor& c : list_cases())
    append(report, run_case_all(c.id));
  return report;
}

MidpointAggregate midpoint_aggregate(const CaseReport& report,
                                     const std::string& case_id) {
  MidpointAggregate agg;
  for (const CaseRow& r : report.rows) {
    if (r.case_id != case_id) continue;
    agg.mean_vs_proposed += std::fabs(r.computed_midpoint -
                                      r.ref.proposed_midpoint_value());
    agg.mean_vs_intlab += std::fabs(r.computed_midpoint -
                                    r.ref.intlab_midpoint_value());
    ++agg.rows;
  }
  if (agg.rows > 0) {
    agg.mean_vs_proposed /= agg.rows;
    agg.mean_vs_intlab /= agg.rows;
  }
  return agg;
}

}  // namespace ivsim
