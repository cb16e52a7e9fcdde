#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcm/experiments.hpp"
#include "pcm/indicators.hpp"
#include "pcm/io.hpp"
#include "pcm/matrix.hpp"
#include "pcm/normalization.hpp"
#include "pcm/tools.hpp"

namespace py = pybind11;
using namespace pcm;

PYBIND11_MODULE(pcmatrix, m) {
  m.doc() = "Inconsistency analysis for pairwise-comparison matrices";
  m.attr("__version__") = kToolVersion;
  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

  py::register_exception<Error>(m, "Error");

  py::class_<Triad>(m, "Triad")
      .def(py::init([](double x, double y, double z) {
             return Triad{x, y, z, 0, 1, 2};
           }),
           py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readonly("x", &Triad::x)
      .def_readonly("y", &Triad::y)
      .def_readonly("z", &Triad::z)
      .def_readonly("i", &Triad::i)
      .def_readonly("j", &Triad::j)
      .def_readonly("k", &Triad::k)
      .def("__repr__", [](const Triad& t) {
        return "Triad(" + std::to_string(t.x) + ", " + std::to_string(t.y) +
               ", " + std::to_string(t.z) + ")";
      });

  py::class_<PCMatrix>(m, "PCMatrix")
      .def(py::init<const std::vector<std::vector<double>>&>(),
           py::arg("entries"))
      .def_static("from_upper_triangle", &PCMatrix::from_upper_triangle,
                  py::arg("n"), py::arg("values"))
      .def_property_readonly("n", &PCMatrix::size)
      .def("at", &PCMatrix::at, py::arg("i"), py::arg("j"))
      .def("rows", &PCMatrix::rows)
      .def("triads", &PCMatrix::triads)
      .def("is_consistent", &PCMatrix::is_consistent, py::arg("tol") = 1e-12);

  py::class_<AdditivePCMatrix>(m, "AdditivePCMatrix")
      .def(py::init<const std::vector<std::vector<double>>&>(),
           py::arg("entries"))
      .def_property_readonly("n", &AdditivePCMatrix::size)
      .def("at", &AdditivePCMatrix::at, py::arg("i"), py::arg("j"))
      .def("rows", &AdditivePCMatrix::rows);

  m.def("to_additive", &to_additive, py::arg("matrix"));
  m.def("to_multiplicative", &to_multiplicative, py::arg("matrix"));

  m.def("kii_triad", &kii_triad, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("kii_triad_exp", &kii_triad_exp, py::arg("x"), py::arg("y"),
        py::arg("z"));
  m.def("distance_indicator_triad", &distance_indicator_triad, py::arg("x"),
        py::arg("y"), py::arg("z"));
  m.def("relative_error_triad", &relative_error_triad, py::arg("x"),
        py::arg("y"), py::arg("z"));
  m.def("zero_one_indicator", &zero_one_indicator, py::arg("x"), py::arg("y"),
        py::arg("z"), py::arg("tol"));
  m.def("additive_kii_triad", &additive_kii_triad, py::arg("x"), py::arg("y"),
        py::arg("z"));
  m.def("saaty_ci", &saaty_ci, py::arg("matrix"));

  py::class_<TriadRecord>(m, "TriadRecord")
      .def_readonly("i", &TriadRecord::i)
      .def_readonly("j", &TriadRecord::j)
      .def_readonly("k", &TriadRecord::k)
      .def_readonly("x", &TriadRecord::x)
      .def_readonly("y", &TriadRecord::y)
      .def_readonly("z", &TriadRecord::z)
      .def_readonly("kii", &TriadRecord::kii)
      .def_readonly("distance", &TriadRecord::distance)
      .def_readonly("relative_error", &TriadRecord::relative_error);

  py::class_<IndicatorReport>(m, "IndicatorReport")
      .def_readonly("per_triad", &IndicatorReport::per_triad)
      .def_readonly("matrix_kii", &IndicatorReport::matrix_kii)
      .def_property_readonly("worst_triad",
                             [](const IndicatorReport& r) {
                               return py::make_tuple(r.worst_i, r.worst_j,
                                                     r.worst_k);
                             })
      .def_readonly("ci", &IndicatorReport::ci)
      .def_readonly("consistent", &IndicatorReport::consistent)
      .def_readonly("tolerance", &IndicatorReport::tolerance);

  m.def("kii_matrix", &kii_matrix, py::arg("matrix"),
        py::arg("tolerance") = kDefaultTolerance);

  py::class_<NormalizationMap> norm(m, "NormalizationMap");
  norm.def_static("exponential", &NormalizationMap::exponential)
      .def_static("logistic", &NormalizationMap::logistic, py::arg("k") = 1.0)
      .def_static("gompertz", &NormalizationMap::gompertz, py::arg("b") = 1.0,
                  py::arg("c") = 1.0);
  m.def("apply", [](const NormalizationMap& map, double t) {
    return apply(map, t);
  }, py::arg("map"), py::arg("t"));
  m.def("check_unit_interval_stability", &check_unit_interval_stability,
        py::arg("samples"), py::arg("seed"));

  m.def(
      "complete_from_generators",
      [](std::size_t n, const std::vector<double>& generators) {
        return complete_from_generators({n, generators});
      },
      py::arg("n"), py::arg("generators"));
  m.def(
      "complete_from_tree",
      [](std::size_t n,
         const std::vector<std::tuple<std::size_t, std::size_t, double>>&
             edges) {
        std::vector<TreeEdge> converted;
        converted.reserve(edges.size());
        for (const auto& [i, j, ratio] : edges) {
          converted.push_back({i, j, ratio});
        }
        return complete_from_tree(n, converted);
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "consistent_alternatives",
      [](double x, double y, double z) {
        const auto fix = consistent_alternatives({x, y, z, 0, 1, 2});
        return py::make_tuple(fix.x_fix, fix.y_fix, fix.z_fix);
      },
      py::arg("x"), py::arg("y"), py::arg("z"));

  py::enum_<TriadElement>(m, "TriadElement")
      .value("x", TriadElement::x)
      .value("y", TriadElement::y)
      .value("z", TriadElement::z);

  py::class_<ReductionStep>(m, "ReductionStep")
      .def_readonly("step", &ReductionStep::step)
      .def_readonly("i", &ReductionStep::i)
      .def_readonly("j", &ReductionStep::j)
      .def_readonly("k", &ReductionStep::k)
      .def_readonly("replaced", &ReductionStep::replaced)
      .def_readonly("old_value", &ReductionStep::old_value)
      .def_readonly("new_value", &ReductionStep::new_value)
      .def_readonly("kii_after", &ReductionStep::kii_after);

  py::class_<ReductionTrace>(m, "ReductionTrace")
      .def_readonly("steps", &ReductionTrace::steps)
      .def_readonly("converged", &ReductionTrace::converged)
      .def_readonly("final_matrix", &ReductionTrace::final_matrix);

  m.def("reduce_step", &reduce_step, py::arg("matrix"), py::arg("blend") = 1.0);
  m.def("reduce", &reduce, py::arg("matrix"),
        py::arg("tolerance") = kDefaultTolerance, py::arg("max_iter") = 1000,
        py::arg("blend") = 1.0);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("n", &ConvergenceRow::n)
      .def_readonly("triad", &ConvergenceRow::triad)
      .def_readonly("distance", &ConvergenceRow::distance)
      .def_readonly("relative_error", &ConvergenceRow::relative_error)
      .def_readonly("kii", &ConvergenceRow::kii);

  m.def("tn_triad", &tn_triad, py::arg("x"), py::arg("n"));
  m.def("convergence_table", &convergence_table, py::arg("x"), py::arg("n_max"));
  m.def("constant_offset_table", &constant_offset_table, py::arg("x"),
        py::arg("c"), py::arg("n_max"));

  py::class_<StickRecord>(m, "StickRecord")
      .def_readonly("triad", &StickRecord::triad)
      .def_readonly("distance", &StickRecord::distance)
      .def_readonly("relative_error", &StickRecord::relative_error)
      .def_readonly("relative_error_true", &StickRecord::relative_error_true);

  py::class_<StickExample>(m, "StickExample")
      .def_readonly("short_sticks", &StickExample::short_sticks)
      .def_readonly("long_sticks", &StickExample::long_sticks);

  m.def("stick_example", &stick_example);

  py::class_<IndicatorStats>(m, "IndicatorStats")
      .def_readonly("mean", &IndicatorStats::mean)
      .def_readonly("max", &IndicatorStats::max)
      .def_readonly("rank_correlation", &IndicatorStats::rank_correlation);

  py::class_<MonteCarloSummary>(m, "MonteCarloSummary")
      .def_readonly("n", &MonteCarloSummary::n)
      .def_readonly("trials", &MonteCarloSummary::trials)
      .def_readonly("perturbation", &MonteCarloSummary::perturbation)
      .def_readonly("seed", &MonteCarloSummary::seed)
      .def_readonly("kii", &MonteCarloSummary::kii)
      .def_readonly("distance", &MonteCarloSummary::distance)
      .def_readonly("ci", &MonteCarloSummary::ci)
      .def_readonly("relative_error", &MonteCarloSummary::relative_error);

  m.def("monte_carlo_comparison", &monte_carlo_comparison, py::arg("n"),
        py::arg("trials"), py::arg("perturbation"), py::arg("seed"));

  m.def(
      "parse_matrix_text",
      [](const std::string& text, const std::string& format) {
        return parse_matrix_text(text, parse_format(format));
      },
      py::arg("text"), py::arg("format") = "csv-upper");
  m.def(
      "serialize_matrix",
      [](const PCMatrix& matrix, const std::string& format) {
        return serialize_matrix(matrix, parse_format(format));
      },
      py::arg("matrix"), py::arg("format") = "csv-full");
  m.def(
      "analyze_json",
      [](const PCMatrix& matrix, double tolerance) {
        return to_json(analyze(matrix, tolerance));
      },
      py::arg("matrix"), py::arg("tolerance") = kDefaultTolerance);
}
