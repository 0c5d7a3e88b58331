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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "ivsim/casebook.hpp"
#include "ivsim/errors.hpp"
#include "ivsim/io.hpp"
#include "ivsim/simulator.hpp"

namespace py = pybind11;

namespace {

ivsim::EnclosureMode mode_from_string(const std::string& mode) {
  if (mode == "degenerate") return ivsim::EnclosureMode::degenerate_nearest;
  if (mode == "tight") return ivsim::EnclosureMode::tight_enclosure;
  throw ivsim::ConfigError("unknown mode '" + mode +
                           "' (expected 'degenerate' or 'tight')");
}

ivsim::Extension extension_from_string(const std::string& ext) {
  if (ext == "natural") return ivsim::Extension::natural;
  if (ext == "refined") return ivsim::Extension::monotone_refined;
  throw ivsim::ConfigError("unknown extension '" + ext +
                           "' (expected 'natural' or 'refined')");
}

ivsim::SimulationConfig make_config(const ivsim::Model& model,
                                    const std::string& x0, long n,
                                    const std::string& input,
                                    const std::string& noise,
                                    const std::string& mode,
                                    const std::string& extension) {
  ivsim::SimulationConfig cfg;
  cfg.model = model;
  cfg.horizon = n;
  cfg.initial_output = ivsim::DecimalLiteral::parse(x0);
  cfg.input = ivsim::InputSignal::parse_spec(input);
  cfg.noise = ivsim::InputSignal::parse_spec(noise);
  cfg.mode = mode_from_string(mode);
  cfg.extension = extension_from_string(extension);
  return cfg;
}

ivsim::IntervalHistory history_from_dicts(
    const std::map<int, ivsim::Interval>& y,
    const std::map<int, ivsim::Interval>& u,
    const std::map<int, ivsim::Interval>& e) {
  ivsim::IntervalHistory h;
  h.y = y;
  h.u = u;
  h.e = e;
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Guaranteed interval simulation of recursive polynomial models";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ivsim::ParseError>(m, "ModelParseError",
                                            PyExc_ValueError);
  py::register_exception<ivsim::EvalError>(m, "EvaluationError",
                                           PyExc_ArithmeticError);
  py::register_exception<ivsim::DomainError>(m, "IntervalDomainError",
                                             PyExc_ValueError);
  py::register_exception<ivsim::ConfigError>(m, "ConfigurationError",
                                             PyExc_ValueError);

  py::class_<ivsim::Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_static("point", &ivsim::Interval::point, py::arg("x"))
      .def_property_readonly("lo", &ivsim::Interval::lo)
      .def_property_readonly("hi", &ivsim::Interval::hi)
      .def("width", [](const ivsim::Interval& iv) { return ivsim::width(iv); })
      .def("midpoint",
           [](const ivsim::Interval& iv) { return ivsim::midpoint(iv); })
      .def("contains",
           [](const ivsim::Interval& iv, double v) {
             return ivsim::contains(iv, v);
           })
      .def("subset_of",
           [](const ivsim::Interval& a, const ivsim::Interval& b) {
             return ivsim::subset(a, b);
           })
      .def("pow", &ivsim::pow_int, py::arg("exponent"))
      .def("__add__", [](const ivsim::Interval& a, const ivsim::Interval& b) { return a + b; })
      .def("__sub__", [](const ivsim::Interval& a, const ivsim::Interval& b) { return a - b; })
      .def("__mul__", [](const ivsim::Interval& a, const ivsim::Interval& b) { return a * b; })
      .def("__truediv__", [](const ivsim::Interval& a, const ivsim::Interval& b) { return a / b; })
      .def("__neg__", [](const ivsim::Interval& a) { return -a; })
      .def("__eq__", [](const ivsim::Interval& a, const ivsim::Interval& b) { return a == b; })
      .def("__repr__", [](const ivsim::Interval& iv) {
        std::ostringstream os;
        os << "Interval(" << ivsim::format_double(iv.lo(), false) << ", "
           << ivsim::format_double(iv.hi(), false) << ")";
        return os.str();
      });

  m.def(
      "from_decimal",
      [](const std::string& text, const std::string& mode) {
        return ivsim::from_decimal(text, mode_from_string(mode));
      },
      py::arg("text"), py::arg("mode") = "tight",
      "Enclose a decimal literal: mode 'tight' (outward, at most one ulp "
      "wide) or 'degenerate' (round-to-nearest point interval).");

  py::class_<ivsim::Model>(m, "Model")
      .def_readonly("name", &ivsim::Model::name)
      .def_readonly("max_lag_y", &ivsim::Model::max_lag_y)
      .def_readonly("max_lag_u", &ivsim::Model::max_lag_u)
      .def_readonly("max_lag_e", &ivsim::Model::max_lag_e)
      .def_readonly("degree", &ivsim::Model::degree)
      .def_property_readonly("max_lag", &ivsim::Model::max_lag)
      .def("__str__", &ivsim::print_model)
      .def("__repr__", [](const ivsim::Model& mo) {
        return "Model('" + ivsim::print_model(mo) + "')";
      })
      .def(
          "eval_point",
          [](const ivsim::Model& mo, const std::map<int, double>& y,
             const std::map<int, double>& u, const std::map<int, double>& e) {
            ivsim::PointHistory h;
            h.y = y;
            h.u = u;
            h.e = e;
            return ivsim::eval_point(mo, h);
          },
          py::arg("y") = std::map<int, double>{},
          py::arg("u") = std::map<int, double>{},
          py::arg("e") = std::map<int, double>{},
          "Evaluate one step in plain binary64 from lag->value dicts.")
      .def(
          "eval_interval",
          [](const ivsim::Model& mo, const std::map<int, ivsim::Interval>& y,
             const std::map<int, ivsim::Interval>& u,
             const std::map<int, ivsim::Interval>& e, const std::string& mode) {
            return ivsim::eval_interval(mo, history_from_dicts(y, u, e),
                                        mode_from_string(mode));
          },
          py::arg("y") = std::map<int, ivsim::Interval>{},
          py::arg("u") = std::map<int, ivsim::Interval>{},
          py::arg("e") = std::map<int, ivsim::Interval>{},
          py::arg("mode") = "degenerate",
          "Evaluate one step as the natural interval extension.");

  m.def("parse_model", &ivsim::parse_model, py::arg("source"),
        py::arg("name") = "",
        "Parse \"y(k) = <expr>\" into a Model, preserving association "
        "order.");
  m.def(
      "models_equal",
      [](const ivsim::Model& a, const ivsim::Model& b) {
        return ivsim::expr_equal(*a.expression, *b.expression);
      },
      "Structural (node-for-node) equality of two parsed models.");

  py::class_<ivsim::OrbitPoint>(m, "OrbitPoint")
      .def_readonly("n", &ivsim::OrbitPoint::n)
      .def_readonly("enclosure", &ivsim::OrbitPoint::enclosure)
      .def_readonly("width", &ivsim::OrbitPoint::width)
      .def_readonly("midpoint", &ivsim::OrbitPoint::midpoint)
      .def("__repr__", [](const ivsim::OrbitPoint& p) {
        std::ostringstream os;
        os << "OrbitPoint(n=" << p.n << ", ["
           << ivsim::format_double(p.enclosure.lo(), false) << ", "
           << ivsim::format_double(p.enclosure.hi(), false) << "])";
        return os.str();
      });

  m.def(
      "run_interval",
      [](const ivsim::Model& model, const std::string& x0, long n,
         const std::string& input, const std::string& noise,
         const std::string& mode, const std::string& extension) {
        return ivsim::run_interval(
            make_config(model, x0, n, input, noise, mode, extension));
      },
      py::arg("model"), py::arg("x0"), py::arg("n"),
      py::arg("input") = "zero", py::arg("noise") = "zero",
      py::arg("mode") = "degenerate", py::arg("extension") = "natural",
      "Guaranteed interval orbit of length n (indices 1..n).");

  m.def(
      "run_point",
      [](const ivsim::Model& model, const std::string& x0, long n,
         const std::string& input, const std::string& noise) {
        return ivsim::run_point(
            make_config(model, x0, n, input, noise, "degenerate", "natural"));
      },
      py::arg("model"), py::arg("x0"), py::arg("n"),
      py::arg("input") = "zero", py::arg("noise") = "zero",
      "Plain binary64 orbit of length n.");

  m.def(
      "divergence_index",
      [](const std::vector<double>& a, const std::vector<double>& b,
         double threshold) -> std::optional<long> {
        return ivsim::divergence_index(a, b, threshold);
      },
      py::arg("a"), py::arg("b"), py::arg("threshold"),
      "Smallest 1-based index where |a[i]-b[i]| exceeds the threshold, or "
      "None.");

  py::class_<ivsim::CaseDescriptor>(m, "CaseDescriptor")
      .def_readonly("id", &ivsim::CaseDescriptor::id)
      .def_readonly("title", &ivsim::CaseDescriptor::title)
      .def_readonly("model_text", &ivsim::CaseDescriptor::model_text)
      .def_readonly("initial_conditions",
                    &ivsim::CaseDescriptor::initial_conditions)
      .def_readonly("horizon", &ivsim::CaseDescriptor::horizon)
      .def_readonly("input_spec", &ivsim::CaseDescriptor::input_spec)
      .def("__repr__", [](const ivsim::CaseDescriptor& c) {
        return "CaseDescriptor('" + c.id + "')";
      });

  py::class_<ivsim::ReferenceRow>(m, "ReferenceRow")
      .def_readonly("case_id", &ivsim::ReferenceRow::case_id)
      .def_readonly("x0", &ivsim::ReferenceRow::x0)
      .def_readonly("n", &ivsim::ReferenceRow::n)
      .def_property_readonly("proposed_width",
                             &ivsim::ReferenceRow::proposed_width_value)
      .def_property_readonly("proposed_midpoint",
                             &ivsim::ReferenceRow::proposed_midpoint_value)
      .def_property_readonly("intlab_width",
                             &ivsim::ReferenceRow::intlab_width_value)
      .def_property_readonly("intlab_midpoint",
                             &ivsim::ReferenceRow::intlab_midpoint_value);

  py::class_<ivsim::CaseRow>(m, "CaseRow")
      .def_readonly("case_id", &ivsim::CaseRow::case_id)
      .def_readonly("x0", &ivsim::CaseRow::x0)
      .def_readonly("n", &ivsim::CaseRow::n)
      .def_readonly("width", &ivsim::CaseRow::computed_width)
      .def_readonly("midpoint", &ivsim::CaseRow::computed_midpoint)
      .def_readonly("ref", &ivsim::CaseRow::ref)
      .def_property_readonly(
          "passed", [](const ivsim::CaseRow& r) { return r.cmp.pass(); })
      .def_property_readonly(
          "midpoint_abs_diff",
          [](const ivsim::CaseRow& r) { return r.cmp.midpoint_abs_diff; })
      .def_property_readonly(
          "width_vs_intlab",
          [](const ivsim::CaseRow& r) { return r.cmp.width_vs_intlab; });

  py::class_<ivsim::CaseReport>(m, "CaseReport")
      .def_readonly("rows", &ivsim::CaseReport::rows)
      .def_readonly("all_pass", &ivsim::CaseReport::all_pass);

  m.def("list_cases", &ivsim::list_cases,
        py::return_value_policy::reference,
        "The embedded benchmark case descriptors.");
  m.def("run_case", &ivsim::run_case, py::arg("case_id"), py::arg("x0"),
        "Run one case instance and compare to the reference table.");
  m.def("run_case_all", &ivsim::run_case_all, py::arg("case_id"));
  m.def("run_all_cases", &ivsim::run_all_cases);
  m.def("reference_checksum", &ivsim::reference_checksum);

  m.def(
      "orbit_csv",
      [](const std::vector<ivsim::OrbitPoint>& orbit, bool hex_floats) {
        return ivsim::orbit_csv(orbit, hex_floats);
      },
      py::arg("orbit"), py::arg("hex_floats") = false);
  m.def(
      "report_csv",
      [](const ivsim::CaseReport& report, bool hex_floats) {
        return ivsim::report_csv(report, hex_floats);
      },
      py::arg("report"), py::arg("hex_floats") = false);
}
