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

#include "ivsim/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace ivsim {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON value for a double: plain number in decimal mode, lossless hex
// string in hex mode.
ordered_json json_number(double v, bool hex) {
  if (hex) return ordered_json(format_double(v, true));
  return ordered_json(v);
}

}  // namespace

std::string format_double(double v, bool hex_floats) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), hex_floats ? "%a" : "%.17g", v);
  return buf;
}

std::string orbit_csv(const std::vector<OrbitPoint>& orbit, bool hex_floats) {
  std::string out = "n,lo,hi,width,midpoint\n";
  for (const OrbitPoint& p : orbit) {
    out += std::to_string(p.n);
    out += ',';
    out += format_double(p.enclosure.lo(), hex_floats);
    out += ',';
    out += format_double(p.enclosure.hi(), hex_floats);
    out += ',';
    out += format_double(p.width, hex_floats);
    out += ',';
    out += format_double(p.midpoint, hex_floats);
    out += '\n';
  }
  return out;
}

std::string orbit_json(const std::vector<OrbitPoint>& orbit, bool hex_floats) {
  ordered_json points = ordered_json::array();
  for (const OrbitPoint& p : orbit) {
    ordered_json row;
    row["n"] = p.n;
    row["lo"] = json_number(p.enclosure.lo(), hex_floats);
    row["hi"] = json_number(p.enclosure.hi(), hex_floats);
    row["width"] = json_number(p.width, hex_floats);
    row["midpoint"] = json_number(p.midpoint, hex_floats);
    points.push_back(std::move(row));
  }
  ordered_json doc;
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

std::string point_orbit_csv(const std::vector<double>& orbit,
                            bool hex_floats) {
  std::string out = "n,value\n";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(orbit[i], hex_floats);
    out += '\n';
  }
  return out;
}

std::string point_orbit_json(const std::vector<double>& orbit,
                             bool hex_floats) {
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    ordered_json row;
    row["n"] = i + 1;
    row["value"] = json_number(orbit[i], hex_floats);
    points.push_back(std::move(row));
  }
  ordered_json doc;
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

std::string report_csv(const CaseReport& report, bool hex_floats) {
  std::string out =
      "case,x0,n,width,midpoint,ref_width,ref_midpoint,intlab_width,"
      "intlab_midpoint,pass\n";
  for (const CaseRow& r : report.rows) {
    out += r.case_id;
    out += ',';
    out += r.x0;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.computed_width, hex_floats);
    out += ',';
    out += format_double(r.computed_midpoint, hex_floats);
    out += ',';
    out += r.ref.proposed_width;
    out += ',';
    out += r.ref.proposed_midpoint;
    out += ',';
    out += r.ref.intlab_width;
    out += ',';
    out += r.ref.intlab_midpoint;
    out += ',';
    out += r.cmp.pass() ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string report_json(const CaseReport& report, bool hex_floats) {
  ordered_json rows = ordered_json::array();
  for (const CaseRow& r : report.rows) {
    ordered_json row;
    row["case"] = r.case_id;
    row["x0"] = r.x0;
    row["n"] = r.n;
    row["width"] = json_number(r.computed_width, hex_floats);
    row["midpoint"] = json_number(r.computed_midpoint, hex_floats);
    row["ref_width"] = r.ref.proposed_width;
    row["ref_midpoint"] = r.ref.proposed_midpoint;
    row["intlab_width"] = r.ref.intlab_width;
    row["intlab_midpoint"] = r.ref.intlab_midpoint;
    row["width_vs_intlab"] = r.cmp.width_vs_intlab;
    row["midpoint_abs_diff"] = r.cmp.midpoint_abs_diff;
    row["pass"] = r.cmp.pass();
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["all_pass"] = report.all_pass;
  return doc.dump(2) + "\n";
}

std::string divergence_csv(const std::vector<double>& a,
                           const std::vector<double>& b, bool hex_floats) {
  std::string out = "n,a,b,absdiff\n";
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(a[i], hex_floats);
    out += ',';
    out += format_double(b[i], hex_floats);
    out += ',';
    out += format_double(std::fabs(a[i] - b[i]), hex_floats);
    out += '\n';
  }
  return out;
}

std::string interval_json(const Interval& iv, bool hex_floats) {
  ordered_json doc;
  doc["lo"] = json_number(iv.lo(), hex_floats);
  doc["hi"] = json_number(iv.hi(), hex_floats);
  return doc.dump();
}

}  // namespace ivsim
