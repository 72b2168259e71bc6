#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jbmeans/errors.hpp"
#include "jbmeans/harness.hpp"
#include "jbmeans/means.hpp"
#include "jbmeans/quadrature.hpp"
#include "jbmeans/serialize.hpp"
#include "jbmeans/spectral.hpp"

namespace py = pybind11;
using namespace jbmeans;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

ScalarFunction function_by_name(const std::string& name, double p) {
  if (name == "power") return ScalarFunction::power(p);
  if (name == "log") return ScalarFunction::log();
  if (name == "inverse") return ScalarFunction::inverse();
  if (name == "sqrt") return ScalarFunction::sqrt();
  if (name == "harmonic_profile") return ScalarFunction::harmonic_profile(p);
  throw DomainError("unknown function '" + name + "'");
}

QuadratureConfig quad_config(double rel_tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = rel_tol;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(jbmeans, m) {
  m.doc() = "Euclidean Jordan algebras, their operator means and an inequality verifier.";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SpectrumDomainError>(m, "SpectrumDomainError", domain_error.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<AlgebraDescriptor>(m, "Algebra")
      .def_static("real_symmetric", &AlgebraDescriptor::real_symmetric, py::arg("n"))
      .def_static("complex_hermitian", &AlgebraDescriptor::complex_hermitian, py::arg("n"))
      .def_static("spin_factor", &AlgebraDescriptor::spin_factor, py::arg("d"))
      .def_static("albert", &AlgebraDescriptor::albert)
      .def_static("parse", [](const std::string& s) { return AlgebraDescriptor::parse(s); })
      .def_property_readonly("name", &AlgebraDescriptor::name)
      .def_property_readonly("kind", [](const AlgebraDescriptor& d) { return kind_name(d.kind()); })
      .def_property_readonly("order", &AlgebraDescriptor::order)
      .def_property_readonly("dimension", &AlgebraDescriptor::dimension)
      .def_property_readonly("rank", &AlgebraDescriptor::rank)
      .def("__eq__", [](const AlgebraDescriptor& a, const AlgebraDescriptor& b) { return a == b; })
      .def("__repr__", [](const AlgebraDescriptor& d) { return "Algebra('" + d.name() + "')"; });

  py::class_<Element>(m, "Element")
      .def(py::init<AlgebraDescriptor, Eigen::VectorXd>(), py::arg("algebra"), py::arg("coords"))
      .def_static("identity", &Element::identity)
      .def_static("zero", &Element::zero)
      .def_property_readonly("algebra", &Element::descriptor)
      .def_property_readonly("coords", &Element::coords)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def("to_json", [](const Element& e) { return dump(element_to_json(e)); })
      .def_static("from_json",
                  [](const std::string& text) { return element_from_json(Json::parse(text)); })
      .def("__repr__", [](const Element& e) {
        return "Element('" + e.descriptor().name() + "', " + element_to_json(e)["coords"].dump() + ")";
      });

  m.def("jordan_product", &jordan_product);
  m.def("quadratic_map", &quadratic_map);
  m.def("generic_trace", &generic_trace);
  m.def("spectral_norm", &spectral_norm);
  m.def("inverse", &inverse);
  m.def(
      "spectrum",
      [](const Element& a) {
        const auto sd = spectral_decompose(a);
        return py::make_tuple(sd.eigenvalues, sd.multiplicities, sd.idempotents);
      },
      "Distinct eigenvalues (descending), multiplicities and idempotents.");
  m.def(
      "apply_function",
      [](const Element& a, const std::string& name, double p) {
        return apply_function(a, function_by_name(name, p));
      },
      py::arg("a"), py::arg("function"), py::arg("parameter") = 0.0,
      "function: power, log, inverse, sqrt or harmonic_profile");
  m.def(
      "loewner_leq",
      [](const Element& a, const Element& b, double tol) {
        const auto r = loewner_leq(a, b, tol);
        py::dict d;
        d["verdict"] = verdict_name(r.verdict);
        d["min_eig_of_difference"] = r.min_eig_of_difference;
        d["margin"] = r.margin();
        d["holds"] = r.holds();
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
  m.def(
      "random_positive",
      [](const AlgebraDescriptor& d, double low, double high, std::uint64_t seed) {
        return random_positive(d, PositiveGenSpec{low, high, seed});
      },
      py::arg("algebra"), py::arg("low"), py::arg("high"), py::arg("seed"));

  m.def("harmonic_mean", &harmonic_mean, py::arg("a"), py::arg("b"), py::arg("weight"));
  m.def("geometric_mean", &geometric_mean, py::arg("a"), py::arg("b"), py::arg("weight"));
  m.def("arithmetic_mean", &arithmetic_mean, py::arg("a"), py::arg("b"), py::arg("weight"));
  m.def("specht_ratio", &specht_ratio);

  m.def(
      "power_integral",
      [](double x, double w, double rel_tol) {
        const auto r = power_integral_scalar(x, w, quad_config(rel_tol));
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("x"), py::arg("weight"), py::arg("rel_tol") = 1e-8);
  m.def(
      "log_integral",
      [](double x, double rel_tol) {
        const auto r = log_integral_scalar(x, quad_config(rel_tol));
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("x"), py::arg("rel_tol") = 1e-8);
  m.def(
      "geometric_mean_integral",
      [](const Element& a, const Element& b, double w, double rel_tol) {
        return geometric_mean_integral(a, b, w, quad_config(rel_tol)).value;
      },
      py::arg("a"), py::arg("b"), py::arg("weight"), py::arg("rel_tol") = 1e-6);
  m.def(
      "uniformity_probe",
      [](const std::string& family, double bound, double weight, int levels) {
        const FunctionFamily f = family == "power" ? FunctionFamily::power_kernel(weight)
                                                   : FunctionFamily::log_kernel();
        return to_python(uniformity_to_json(uniformity_probe(f, bound, QuadratureConfig{}, levels)));
      },
      py::arg("family"), py::arg("M") = 1.0, py::arg("weight") = 0.5, py::arg("levels") = 4);

  m.def("check_ids", &check_ids);
  m.def(
      "verify",
      [](const py::object& config) {
        SuiteConfig cfg;
        if (!config.is_none()) cfg = suite_config_from_json(from_python(config));
        SuiteReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(cfg);
        }
        return to_python(report_to_json(report));
      },
      py::arg("config") = py::none(),
      "Runs the verification suite; config is a dict with the CLI config keys.");
}
