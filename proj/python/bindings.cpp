#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meltdown.hpp"

namespace py = pybind11;
using namespace meltdown;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Logarithms rebuilt from arithmetic and Heron square roots.";

  py::register_exception<Error>(m, "MeltdownError", PyExc_ValueError);

  py::class_<HeronStep>(m, "HeronStep")
      .def_readonly("guess", &HeronStep::guess)
      .def_readonly("quotient", &HeronStep::quotient);

  py::class_<SqrtTrace>(m, "SqrtTrace")
      .def_readonly("input", &SqrtTrace::input)
      .def_readonly("initial_guess", &SqrtTrace::initial_guess)
      .def_readonly("iterations", &SqrtTrace::iterations)
      .def_readonly("result", &SqrtTrace::result)
      .def_readonly("converged", &SqrtTrace::converged)
      .def_readonly("steps_used", &SqrtTrace::steps_used);

  m.def(
      "heron_sqrt",
      [](double x, double rel_tol, int max_iterations, std::optional<double> initial_guess) {
        return heron_sqrt(x, HeronOptions{rel_tol, max_iterations, initial_guess});
      },
      py::arg("x"), py::arg("rel_tol") = kDefaultRelTol,
      py::arg("max_iterations") = kDefaultMaxIterations, py::arg("initial_guess") = py::none());
  m.def("int_pow", &int_pow, py::arg("b"), py::arg("m"));

  py::class_<RootLadder>(m, "RootLadder")
      .def(py::init<double, int>(), py::arg("base"), py::arg("depth") = kDefaultLadderDepth)
      .def_property_readonly("base", &RootLadder::base)
      .def_property_readonly("depth", &RootLadder::depth)
      .def_property_readonly("rel_tol_used", &RootLadder::rel_tol_used)
      .def_property_readonly("rungs",
                             [](const RootLadder& l) {
                               auto r = l.rungs();
                               return std::vector<double>(r.begin(), r.end());
                             })
      .def("rung", &RootLadder::rung)
      .def("excess", &RootLadder::excess);
  m.def("build_ladder", &build_ladder, py::arg("base"), py::arg("depth"));
  m.def("rung_epsilon", &rung_epsilon, py::arg("ladder"), py::arg("j"));

  py::class_<DyadicExponent>(m, "DyadicExponent")
      .def(py::init<std::int64_t, int>(), py::arg("numerator"), py::arg("level"))
      .def_property_readonly("numerator", &DyadicExponent::numerator)
      .def_property_readonly("level", &DyadicExponent::level)
      .def("value", &DyadicExponent::value)
      .def("__float__", &DyadicExponent::value);

  py::class_<LogValue>(m, "LogValue")
      .def_readonly("base", &LogValue::base)
      .def_readonly("characteristic", &LogValue::characteristic)
      .def_readonly("mantissa", &LogValue::mantissa)
      .def_readonly("error_bound", &LogValue::error_bound)
      .def("value", &LogValue::value)
      .def("__float__", &LogValue::value);

  py::class_<BoundedValue>(m, "BoundedValue")
      .def_readonly("value", &BoundedValue::value)
      .def_readonly("error_bound", &BoundedValue::error_bound);

  m.def("log_dyadic", &log_dyadic, py::arg("y"), py::arg("ladder"));
  m.def("antilog_dyadic", py::overload_cast<const LogValue&, const RootLadder&>(&antilog_dyadic),
        py::arg("x"), py::arg("ladder"));
  m.def("antilog_dyadic", py::overload_cast<double, const RootLadder&>(&antilog_dyadic),
        py::arg("x"), py::arg("ladder"));
  m.def("convert_base",
        py::overload_cast<const LogValue&, double, const RootLadder&>(&convert_base),
        py::arg("x"), py::arg("new_base"), py::arg("ladder_q"));
  m.def("log_product_check", &log_product_check, py::arg("y1"), py::arg("y2"), py::arg("ladder"));

  py::class_<RadixNumeral>(m, "RadixNumeral")
      .def(py::init<int, std::vector<int>>(), py::arg("base"), py::arg("digits"))
      .def_static("parse", &RadixNumeral::parse, py::arg("text"), py::arg("base"))
      .def_property_readonly("base", &RadixNumeral::base)
      .def_property_readonly("digits", &RadixNumeral::digits)
      .def("coefficient", &RadixNumeral::coefficient)
      .def("__str__", &RadixNumeral::to_string);
  m.def("to_radix", &to_radix, py::arg("m"), py::arg("base"));
  m.def("from_radix", &from_radix, py::arg("numeral"));
  m.def("fractional_digits", &fractional_digits, py::arg("x"), py::arg("base"), py::arg("count"));

  py::class_<SlopeEstimate>(m, "SlopeEstimate")
      .def_readonly("base", &SlopeEstimate::base)
      .def_readonly("x", &SlopeEstimate::x)
      .def_readonly("ladder_level", &SlopeEstimate::ladder_level)
      .def_readonly("epsilon", &SlopeEstimate::epsilon)
      .def_readonly("slope", &SlopeEstimate::slope);
  m.def("slope_log10", &slope_log10, py::arg("x"), py::arg("n"), py::arg("ladder10"));
  m.def(
      "limit_sequence",
      [](int n_max, const RootLadder& ladder) {
        std::vector<std::pair<int, double>> out;
        for (const LimitTerm& t : limit_sequence(n_max, ladder)) out.emplace_back(t.n, t.t);
        return out;
      },
      py::arg("n_max"), py::arg("ladder10"));
  m.def("discover_e", &discover_e, py::arg("n"), py::arg("ladder10"));
  m.def("slope_log_p", &slope_log_p, py::arg("p"), py::arg("x"), py::arg("n"),
        py::arg("ladder10"));
  m.def("riemann_ln", &riemann_ln, py::arg("x"), py::arg("steps"));

  py::class_<LogTable>(m, "LogTable")
      .def_readonly("base", &LogTable::base)
      .def_readonly("level", &LogTable::level)
      .def_readonly("built_from", &LogTable::built_from)
      .def_property_readonly("values",
                             [](const LogTable& t) {
                               std::vector<double> v;
                               for (const auto& e : t.entries) v.push_back(e.value);
                               return v;
                             })
      .def("to_csv", &table_to_csv)
      .def("to_json", &table_to_json);
  m.def("build_table", &build_table, py::arg("ladder"), py::arg("level"));
  m.def(
      "lookup_antilog",
      [](const LogTable& t, double mantissa) {
        const AntilogLookup hit = lookup_antilog(t, mantissa);
        return std::make_pair(hit.value, hit.grid_error);
      },
      py::arg("table"), py::arg("mantissa"));

  py::class_<MultiplicationDetail>(m, "MultiplicationDetail")
      .def_readonly("x1", &MultiplicationDetail::x1)
      .def_readonly("x2", &MultiplicationDetail::x2)
      .def_readonly("sum", &MultiplicationDetail::sum)
      .def_readonly("characteristic", &MultiplicationDetail::characteristic)
      .def_readonly("mantissa", &MultiplicationDetail::mantissa)
      .def_readonly("table_value", &MultiplicationDetail::table_value)
      .def_readonly("grid_error", &MultiplicationDetail::grid_error)
      .def_readonly("relative_error_bound", &MultiplicationDetail::relative_error_bound);
  py::class_<MultiplicationResult>(m, "MultiplicationResult")
      .def_readonly("estimate", &MultiplicationResult::estimate)
      .def_readonly("detail", &MultiplicationResult::detail);
  m.def("multiply_via_logs", &multiply_via_logs, py::arg("y1"), py::arg("y2"), py::arg("table"),
        py::arg("ladder"));

  m.def("format_sig", &format_sig, py::arg("value"), py::arg("sig_digits") = 10);
}
