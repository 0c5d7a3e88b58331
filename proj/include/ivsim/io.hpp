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
#include <vector>

#include "ivsim/casebook.hpp"
#include "ivsim/simulator.hpp"

// CSV and JSON renderings of orbits and case reports. CSV uses comma
// separators, '\n' line endings and a mandatory header row. Numbers are
// written as 17-significant-digit decimals (round-trippable) or, with
// hex_floats, as lossless hexadecimal significands for bit-exact
// round-trips.

namespace ivsim {

std::string format_double(double v, bool hex_floats);

// Header: n,lo,hi,width,midpoint
std::string orbit_csv(const std::vector<OrbitPoint>& orbit, bool hex_floats);
std::string orbit_json(const std::vector<OrbitPoint>& orbit, bool hex_floats);

// Header: n,value
std::string point_orbit_csv(const std::vector<double>& orbit, bool hex_floats);
std::string point_orbit_json(const std::vector<double>& orbit, bool hex_floats);

// Header:
// case,x0,n,width,midpoint,ref_width,ref_midpoint,intlab_width,intlab_midpoint,pass
std::string report_csv(const CaseReport& report, bool hex_floats);
std::string report_json(const CaseReport& report, bool hex_floats);

// Header: n,a,b,absdiff
std::string divergence_csv(const std::vector<double>& a,
                           const std::vector<double>& b, bool hex_floats);

// {"lo": ..., "hi": ...} with numbers or hex-float strings.
std::string interval_json(const Interval& iv, bool hex_floats);

}  // namespace ivsim
