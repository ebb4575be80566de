#include <optional>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deagrs/analysis.hpp"
#include "deagrs/errors.hpp"
#include "deagrs/grs.hpp"
#include "deagrs/ram.hpp"
#include "deagrs/rts.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

deagrs::OmegaSystem omega_for(const deagrs::Dataset& data, std::size_t o, deagrs::WeightScheme scheme,
                              deagrs::Regime regime, const deagrs::Tolerances& tol) {
  std::vector<deagrs::RamResult> results;
  for (std::size_t j = 0; j < data.size(); ++j) results.push_back(deagrs::evaluate(data, j, scheme, regime, tol));
  const auto efficient = deagrs::efficient_set(results);
  return deagrs::omega_system(data, results.at(o), efficient);
}

deagrs::OutputFormat format_from(const std::string& name) {
  if (name == "json") return deagrs::OutputFormat::json;
  if (name == "csv") return deagrs::OutputFormat::csv;
  if (name == "table") return deagrs::OutputFormat::table;
  throw deagrs::DataError("unknown output format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Slack-based DEA: efficiency scores, global reference sets and returns to scale";

  py::register_exception<deagrs::SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<deagrs::DataError>(m, "DataError", PyExc_ValueError);

  py::enum_<deagrs::WeightScheme>(m, "WeightScheme")
      .value("ram", deagrs::WeightScheme::ram)
      .value("additive", deagrs::WeightScheme::additive)
      .value("bam", deagrs::WeightScheme::bam);
  py::enum_<deagrs::Regime>(m, "Regime").value("vrs", deagrs::Regime::vrs).value("crs", deagrs::Regime::crs);
  py::enum_<deagrs::RtsClass>(m, "RtsClass")
      .value("increasing", deagrs::RtsClass::increasing)
      .value("constant", deagrs::RtsClass::constant)
      .value("decreasing", deagrs::RtsClass::decreasing);

  py::class_<deagrs::Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_property(
          "feas_tol", [](const deagrs::Tolerances& t) { return t.solver.feas_tol; },
          [](deagrs::Tolerances& t, double v) { t.solver.feas_tol = v; })
      .def_property(
          "opt_tol", [](const deagrs::Tolerances& t) { return t.solver.opt_tol; },
          [](deagrs::Tolerances& t, double v) { t.solver.opt_tol = v; })
      .def_readwrite("efficiency", &deagrs::Tolerances::efficiency)
      .def_readwrite("support", &deagrs::Tolerances::support)
      .def_readwrite("rts", &deagrs::Tolerances::rts)
      .def_readwrite("rank", &deagrs::Tolerances::rank);

  py::class_<deagrs::Dataset>(m, "Dataset")
      .def(py::init<std::vector<std::string>, Eigen::MatrixXd, Eigen::MatrixXd>(), "names"_a, "inputs"_a,
           "outputs"_a, "inputs is m x n and outputs s x n, one column per unit")
      .def(py::init<std::vector<std::string>, std::vector<std::string>, std::vector<std::string>, Eigen::MatrixXd,
                    Eigen::MatrixXd>(),
           "names"_a, "input_labels"_a, "output_labels"_a, "inputs"_a, "outputs"_a)
      .def_property_readonly("names", &deagrs::Dataset::names)
      .def_property_readonly("input_labels", &deagrs::Dataset::input_labels)
      .def_property_readonly("output_labels", &deagrs::Dataset::output_labels)
      .def_property_readonly("inputs", &deagrs::Dataset::inputs)
      .def_property_readonly("outputs", &deagrs::Dataset::outputs)
      .def("index_of", &deagrs::Dataset::index_of)
      .def("__len__", &deagrs::Dataset::size);

  m.def("parse_dataset", [](const std::string& text) { return deagrs::parse_dataset(text); }, "text"_a);

  m.def(
      "compute_ranges",
      [](const deagrs::Dataset& d) {
        const auto r = deagrs::compute_ranges(d);
        return py::make_tuple(r.input, r.output);
      },
      "data"_a);

  py::class_<deagrs::RamResult>(m, "RamResult")
      .def_readonly("dmu", &deagrs::RamResult::dmu)
      .def_readonly("score", &deagrs::RamResult::score)
      .def_readonly("slack_sum", &deagrs::RamResult::slack_sum)
      .def_readonly("input_slacks", &deagrs::RamResult::input_slacks)
      .def_readonly("output_slacks", &deagrs::RamResult::output_slacks)
      .def_readonly("lambda_", &deagrs::RamResult::lambda)
      .def_readonly("projected_inputs", &deagrs::RamResult::projected_inputs)
      .def_readonly("projected_outputs", &deagrs::RamResult::projected_outputs)
      .def_readonly("efficient", &deagrs::RamResult::efficient);

  py::class_<deagrs::GrsResult>(m, "GrsResult")
      .def_readonly("dmu", &deagrs::GrsResult::dmu)
      .def_readonly("members", &deagrs::GrsResult::members)
      .def_readonly("efficient_indices", &deagrs::GrsResult::efficient_indices)
      .def_readonly("weights", &deagrs::GrsResult::weights)
      .def_readonly("input_slacks", &deagrs::GrsResult::input_slacks)
      .def_readonly("output_slacks", &deagrs::GrsResult::output_slacks)
      .def_readonly("projected_inputs", &deagrs::GrsResult::projected_inputs)
      .def_readonly("projected_outputs", &deagrs::GrsResult::projected_outputs)
      .def("weight_of", &deagrs::GrsResult::weight_of);

  py::class_<deagrs::MinimumFace>(m, "MinimumFace")
      .def_readonly("vertex_indices", &deagrs::MinimumFace::vertex_indices)
      .def_readonly("dimension", &deagrs::MinimumFace::dimension);

  py::class_<deagrs::InterceptBounds>(m, "InterceptBounds")
      .def_readonly("omega_min", &deagrs::InterceptBounds::omega_min)
      .def_readonly("omega_max", &deagrs::InterceptBounds::omega_max);

  py::class_<deagrs::RtsClassification>(m, "RtsClassification")
      .def_readonly("omega_min", &deagrs::RtsClassification::omega_min)
      .def_readonly("omega_max", &deagrs::RtsClassification::omega_max)
      .def_readonly("rts_class", &deagrs::RtsClassification::rts_class);

  const deagrs::Tolerances defaults;

  m.def("evaluate", &deagrs::evaluate, "data"_a, "o"_a, "scheme"_a = deagrs::WeightScheme::ram,
        "regime"_a = deagrs::Regime::vrs, "tol"_a = defaults);
  m.def("efficient_set",
        py::overload_cast<const deagrs::Dataset&, deagrs::WeightScheme, deagrs::Regime, const deagrs::Tolerances&>(
            &deagrs::efficient_set),
        "data"_a, "scheme"_a = deagrs::WeightScheme::ram, "regime"_a = deagrs::Regime::vrs, "tol"_a = defaults);
  m.def("identify_grs",
        py::overload_cast<const deagrs::Dataset&, std::size_t, deagrs::WeightScheme, deagrs::Regime,
                          const deagrs::Tolerances&>(&deagrs::identify_grs),
        "data"_a, "o"_a, "scheme"_a = deagrs::WeightScheme::ram, "regime"_a = deagrs::Regime::vrs,
        "tol"_a = defaults);
  m.def(
      "oracle_grs",
      [](const deagrs::Dataset& data, std::size_t o, deagrs::WeightScheme scheme, deagrs::Regime regime,
         const deagrs::Tolerances& tol) { return deagrs::oracle_grs(omega_for(data, o, scheme, regime, tol), tol); },
      "data"_a, "o"_a, "scheme"_a = deagrs::WeightScheme::ram, "regime"_a = deagrs::Regime::vrs,
      "tol"_a = defaults);
  m.def("minimum_face", &deagrs::minimum_face, "data"_a, "grs"_a, "tol"_a = defaults);
  m.def(
      "max_support_solution",
      [](const Eigen::MatrixXd& a, std::optional<Eigen::MatrixXd> b, std::optional<Eigen::VectorXd> d,
         const deagrs::Tolerances& tol) {
        const Eigen::MatrixXd bb = b ? *b : Eigen::MatrixXd(a.rows(), 0);
        const auto sol = deagrs::max_support_solution(a, bb, d, tol);
        return py::make_tuple(sol.u, sol.v);
      },
      "a"_a, "b"_a = py::none(), "d"_a = py::none(), "tol"_a = defaults);
  m.def("intercept_bounds", &deagrs::intercept_bounds, "data"_a, "x"_a, "y"_a, "tol"_a = defaults, "clamp"_a = py::none());
  m.def("classify_rts", &deagrs::classify_rts, "omega_min"_a, "omega_max"_a, "rts_tol"_a = defaults.rts);
  m.def("rts_of_dmu", &deagrs::rts_of_dmu, "data"_a, "o"_a, "scheme"_a = deagrs::WeightScheme::ram,
        "tol"_a = defaults);

  m.def(
      "report",
      [](const deagrs::Dataset& data, const std::string& format, deagrs::WeightScheme scheme, deagrs::Regime regime,
         std::vector<std::string> dmus, const deagrs::Tolerances& tol) {
        deagrs::AnalysisConfig config;
        config.scheme = scheme;
        config.regime = regime;
        config.tol = tol;
        config.output_format = format_from(format);
        config.dmu_filter = std::move(dmus);
        return deagrs::render_report(deagrs::run_analysis(config, data), config.output_format);
      },
      "data"_a, "format"_a = "json", "scheme"_a = deagrs::WeightScheme::ram, "regime"_a = deagrs::Regime::vrs,
      "dmus"_a = std::vector<std::string>{}, "tol"_a = defaults,
      "Run the full pipeline and render it as json, csv or table text");
}
