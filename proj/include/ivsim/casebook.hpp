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

#include <cstdint>
#include <string>
#include <vector>

#include "ivsim/simulator.hpp"

namespace ivsim {

// Three benchmark systems, four initial conditions each. The reference
// columns are transcribed verbatim from published width/midpoint tables of
// both a per-operation directed-rounding run and an interval-toolbox run
// of the same systems, at the checkpoints n in {1, 5, 10, 20}.
struct CaseDescriptor {
  std::string id;          // "logistic", "sine", "flexible"
  std::string title;
  std::string model_text;
  std::vector<std::string> initial_conditions;  // four x0 per case
  long horizon;
  std::string input_spec;  // InputSignal::parse_spec syntax
  std::vector<long> report_rows;
  Extension extension = Extension::natural;
};

const std::vector<CaseDescriptor>& list_cases();
const CaseDescriptor& find_case(const std::string& id);  // throws ConfigError

struct ReferenceRow {
  std::string case_id;
  std::string x0;
  long n;
  std::string proposed_width;
  std::string proposed_midpoint;
  std::string intlab_width;
  std::string intlab_midpoint;

  double proposed_width_value() const;
  double proposed_midpoint_value() const;
  double intlab_width_value() const;
  double intlab_midpoint_value() const;
};

const std::vector<ReferenceRow>& reference_rows();
const ReferenceRow& find_reference_row(const std::string& case_id,
                                       const std::string& x0, long n);

// FNV-1a over the canonical row encoding; pinned in the tests so silent
// edits of the embedded tables fail.
std::uint64_t reference_checksum();

struct RowComparison {
  bool width_le_intlab = false;
  bool width_within_10x_proposed = false;
  bool midpoint_agrees = false;
  double width_vs_intlab = 0;    // computed / intlab (0 when both are 0)
  double midpoint_abs_diff = 0;  // |computed - proposed|

  bool pass() const {
    return width_le_intlab && width_within_10x_proposed && midpoint_agrees;
  }
};

// Pass criteria: (a) computed width <= toolbox width, (b) computed width
// <= 10x the proposed-method width, (c) |computed - proposed| midpoint
// difference <= max(computed width, proposed width, 1e-12).
RowComparison compare_row(const OrbitPoint& computed, const ReferenceRow& ref);

struct CaseRow {
  std::string case_id;
  std::string x0;
  long n;
  double computed_width;
  double computed_midpoint;
  ReferenceRow ref;
  RowComparison cmp;
};

struct CaseReport {
  std::vector<CaseRow> rows;  // ordered by case, x0, n
  bool all_pass = true;
};

SimulationConfig case_config(const CaseDescriptor& c, const std::string& x0);

// One case instance (a case id plus one of its initial conditions) run to
// N=20 in degenerate-nearest mode and joined to the reference rows.
CaseReport run_case(const std::string& case_id, const std::string& x0);

// Every instance of one case, or of all cases.
CaseReport run_case_all(const std::string& case_id);
CaseReport run_all_cases();

struct MidpointAggregate {
  double mean_vs_proposed = 0;  // mean |computed - proposed| over the rows
  double mean_vs_intlab = 0;    // mean |computed - intlab| over the rows
  int rows = 0;
};

MidpointAggregate midpoint_aggregate(const CaseReport& report,
                                     const std::string& case_id);

}  // namespace ivsim
