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

// ivsim command line: guaranteed interval simulation of recursive
// polynomial models.
//
//   ivsim run     --model ... --x0 ... --n ...   simulate one model
//   ivsim case    all | logistic | sine | flexible   benchmark reports
//   ivsim diverge --model-a ... --model-b ...    compare two extensions
//   ivsim list                                   show benchmark cases
//
// Exit codes: 0 success (and all report rows passing), 1 report failures,
// 2 parse/configuration errors, 3 evaluation errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivsim/casebook.hpp"
#include "ivsim/errors.hpp"
#include "ivsim/io.hpp"
#include "ivsim/simulator.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputOptions {
  std::string out_path;  // empty: stdout
  std::string format = "csv";
  bool hex_floats = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_path, "Write output to this file");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--hex-floats", opts.hex_floats,
                "Emit lossless hexadecimal floats (byte-stable output)");
}

// Writes payload to the chosen sink and returns the stream for the
// human-readable summary: stdout when the payload went to a file, stderr
// when the payload occupies stdout.
std::ostream& emit(const OutputOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return std::cerr;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw ivsim::ConfigError("cannot open output file " + opts.out_path);
  out << payload;
  return std::cout;
}

ivsim::Model load_model(const std::string& inline_text,
                        const std::string& file_path, const char* what) {
  if (!inline_text.empty() && !file_path.empty())
    throw ivsim::ConfigError(std::string("give either an inline model or a "
                                         "model file for ") +
                             what + ", not both");
  if (!inline_text.empty()) return ivsim::parse_model(inline_text, "inline");
  if (file_path.empty())
    throw ivsim::ConfigError(std::string("no model given for ") + what);
  std::ifstream in(file_path);
  if (!in) throw ivsim::ConfigError("cannot open model file " + file_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ivsim::parse_model_file(ss.str(),
                                 std::filesystem::path(file_path).stem());
}

ivsim::EnclosureMode parse_mode(const std::string& mode) {
  if (mode == "degenerate") return ivsim::EnclosureMode::degenerate_nearest;
  if (mode == "tight") return ivsim::EnclosureMode::tight_enclosure;
  throw ivsim::ConfigError("unknown mode '" + mode +
                           "' (expected degenerate or tight)");
}

ivsim::Extension parse_extension(const std::string& ext) {
  if (ext == "natural") return ivsim::Extension::natural;
  if (ext == "refined") return ivsim::Extension::monotone_refined;
  throw ivsim::ConfigError("unknown extension '" + ext +
                           "' (expected natural or refined)");
}

int cmd_run(const std::string& model_text, const std::string& model_file,
            const std::string& x0, long n, const std::string& input_spec,
            const std::string& noise_spec, const std::string& mode,
            const std::string& extension, bool point_orbit,
            const OutputOptions& opts) {
  ivsim::SimulationConfig cfg;
  cfg.model = load_model(model_text, model_file, "run");
  cfg.horizon = n;
  cfg.initial_output = ivsim::DecimalLiteral::parse(x0);
  cfg.input = ivsim::InputSignal::parse_spec(input_spec);
  cfg.noise = ivsim::InputSignal::parse_spec(noise_spec);
  cfg.mode = parse_mode(mode);
  cfg.extension = parse_extension(extension);

  if (point_orbit) {
    std::vector<double> orbit = ivsim::run_point(cfg);
    std::ostream& summary =
        emit(opts, opts.format == "json"
                       ? ivsim::point_orbit_json(orbit, opts.hex_floats)
                       : ivsim::point_orbit_csv(orbit, opts.hex_floats));
    summary << "n=" << orbit.size()
            << " value=" << ivsim::format_double(orbit.back(), opts.hex_floats)
            << "\n";
    return 0;
  }

  std::vector<ivsim::OrbitPoint> orbit = ivsim::run_interval(cfg);
  const ivsim::OrbitPoint& last = orbit.back();
  std::ostream& summary =
      emit(opts, opts.format == "json"
                     ? ivsim::orbit_json(orbit, opts.hex_floats)
                     : ivsim::orbit_csv(orbit, opts.hex_floats));
  summary << "n=" << last.n
          << " width=" << ivsim::format_double(last.width, opts.hex_floats)
          << " midpoint="
          << ivsim::format_double(last.midpoint, opts.hex_floats) << "\n";
  return 0;
}

int cmd_case(const std::string& selector, const std::string& x0,
             const OutputOptions& opts) {
  ivsim::CaseReport report;
  if (selector == "all") {
    if (!x0.empty())
      throw ivsim::ConfigError("--x0 cannot be combined with 'case all'");
    report = ivsim::run_all_cases();
  } else if (x0.empty()) {
    report = ivsim::run_case_all(selector);
  } else {
    report = ivsim::run_case(selector, x0);
  }

  std::ostream& summary =
      emit(opts, opts.format == "json"
                     ? ivsim::report_json(report, opts.hex_floats)
                     : ivsim::report_csv(report, opts.hex_floats));
  std::size_t passed = 0;
  for (const ivsim::CaseRow& r : report.rows)
    if (r.cmp.pass()) ++passed;
  summary << passed << "/" << report.rows.size() << " rows pass\n";
  return report.all_pass ? 0 : 1;
}

int cmd_diverge(const std::string& model_a_text, const std::string& file_a,
                const std::string& model_b_text, const std::string& file_b,
                const std::string& x0, long n, double threshold,
                const std::string& input_spec, const OutputOptions& opts) {
  ivsim::SimulationConfig cfg_a;
  cfg_a.model = load_model(model_a_text, file_a, "--model-a");
  cfg_a.horizon = n;
  cfg_a.initial_output = ivsim::DecimalLiteral::parse(x0);
  cfg_a.input = ivsim::InputSignal::parse_spec(input_spec);

  ivsim::SimulationConfig cfg_b = cfg_a;
  cfg_b.model = load_model(model_b_text, file_b, "--model-b");

  if (cfg_a.model.max_lag_y != cfg_b.model.max_lag_y ||
      cfg_a.model.max_lag_u != cfg_b.model.max_lag_u ||
      cfg_a.model.max_lag_e != cfg_b.model.max_lag_e)
    throw ivsim::ConfigError(
        "the two models have different maximum lags and cannot be compared");

  std::vector<double> a = ivsim::run_point(cfg_a);
  std::vector<double> b = ivsim::run_point(cfg_b);
  std::optional<long> index = ivsim::divergence_index(a, b, threshold);

  std::ostream& summary = emit(opts, ivsim::divergence_csv(a, b, opts.hex_floats));
  if (index)
    summary << "divergence index: " << *index << "\n";
  else
    summary << "divergence index: none\n";
  return 0;
}

int cmd_list() {
  for (const ivsim::CaseDescriptor& c : ivsim::list_cases()) {
    std::cout << c.id << ": " << c.title << "\n  model: " << c.model_text
              << "\n  x0:";
    for (const std::string& x0 : c.initial_conditions) std::cout << " " << x0;
    std::cout << "\n  N: " << c.horizon << "  input: " << c.input_spec
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guaranteed interval simulation of recursive polynomial "
               "models (NARMAX / NAR / ARX)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Simulate a model and write the orbit");
  std::string run_model, run_model_file, run_x0, run_input = "zero";
  std::string run_noise = "zero", run_mode = "degenerate";
  std::string run_extension = "natural";
  long run_n = 0;
  bool run_point_orbit = false;
  OutputOptions run_out;
  run->add_option("--model", run_model, "Inline model text: \"y(k) = ...\"");
  run->add_option("--model-file", run_model_file, "Model file path");
  run->add_option("--x0", run_x0, "Initial output value (decimal)")
      ->required();
  run->add_option("--n", run_n, "Horizon N (indices 1..N)")->required();
  run->add_option("--input", run_input,
                  "Input signal: zero | const:<v> | step:<amp>:<start> | "
                  "file:<path>");
  run->add_option("--noise", run_noise, "Noise signal (same syntax)");
  run->add_option("--mode", run_mode,
                  "Constant/initial-value enclosure mode")
      ->check(CLI::IsMember({"degenerate", "tight"}));
  run->add_option("--extension", run_extension,
                  "Interval extension: natural, or refined (monotone "
                  "endpoint images where certified)")
      ->check(CLI::IsMember({"natural", "refined"}));
  run->add_flag("--point", run_point_orbit,
                "Plain binary64 orbit instead of interval enclosures");
  add_output_options(run, run_out);

  // case
  auto* case_cmd =
      app.add_subcommand("case", "Reproduce benchmark cases and compare "
                                 "against the embedded reference tables");
  std::string case_selector, case_x0;
  OutputOptions case_out;
  case_cmd->add_option("selector", case_selector,
                       "Case id (logistic, sine, flexible) or 'all'")
      ->required();
  case_cmd->add_option("--x0", case_x0,
                       "Restrict to one initial condition of the case");
  add_output_options(case_cmd, case_out);

  // diverge
  auto* diverge =
      app.add_subcommand("diverge", "Compare point orbits of two model "
                                    "forms and report where they separate");
  std::string div_a, div_a_file, div_b, div_b_file, div_x0;
  std::string div_input = "zero";
  long div_n = 0;
  double div_threshold = 0.5;
  OutputOptions div_out;
  diverge->add_option("--model-a", div_a, "First model (inline)");
  diverge->add_option("--model-file-a", div_a_file, "First model (file)");
  diverge->add_option("--model-b", div_b, "Second model (inline)");
  diverge->add_option("--model-file-b", div_b_file, "Second model (file)");
  diverge->add_option("--x0", div_x0, "Initial output value")->required();
  diverge->add_option("--n", div_n, "Horizon N")->required();
  diverge->add_option("--threshold", div_threshold,
                      "Divergence threshold on |a-b|");
  diverge->add_option("--input", div_input, "Input signal spec");
  add_output_options(diverge, div_out);

  auto* list = app.add_subcommand("list", "List the embedded benchmark cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run->parsed())
      return cmd_run(run_model, run_model_file, run_x0, run_n, run_input,
                     run_noise, run_mode, run_extension, run_point_orbit,
                     run_out);
    if (case_cmd->parsed()) return cmd_case(case_selector, case_x0, case_out);
    if (diverge->parsed())
      return cmd_diverge(div_a, div_a_file, div_b, div_b_file, div_x0, div_n,
                         div_threshold, div_input, div_out);
    if (list->parsed()) return cmd_list();
  } catch (const ivsim::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ivsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
