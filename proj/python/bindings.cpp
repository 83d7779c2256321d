#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>

#include "dha/geometry.hpp"
#include "dha/oracle.hpp"
#include "dha/solver.hpp"
#include "dha/special_functions.hpp"

namespace py = pybind11;
using namespace dha;

namespace {

Tolerance make_tol(double tol, int max_iterations) { return {tol, max_iterations}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lens-overlap geometry, special functions and the half-area offset.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  py::enum_<KeplerMethod>(m, "KeplerMethod")
      .value("newton", KeplerMethod::newton)
      .value("series", KeplerMethod::series);

  py::class_<KeplerSolution>(m, "KeplerSolution")
      .def_readonly("y", &KeplerSolution::y)
      .def_readonly("residual", &KeplerSolution::residual)
      .def_readonly("method", &KeplerSolution::method)
      .def_readonly("iterations_or_terms", &KeplerSolution::iterations_or_terms);

  py::class_<OffsetSolution>(m, "OffsetSolution")
      .def_readonly("d", &OffsetSolution::d)
      .def_readonly("residual", &OffsetSolution::residual)
      .def_readonly("iterations", &OffsetSolution::iterations);

  py::class_<MethodResult>(m, "MethodResult")
      .def_readonly("name", &MethodResult::name)
      .def_readonly("value", &MethodResult::value)
      .def_readonly("error", &MethodResult::error)
      .def_readonly("digits_matched", &MethodResult::digits_matched);

  py::class_<MethodReport>(m, "MethodReport")
      .def_readonly("d_rootfind", &MethodReport::d_rootfind)
      .def_readonly("d_kepler", &MethodReport::d_kepler)
      .def_readonly("d_archav", &MethodReport::d_archav)
      .def_readonly("d_invbeta", &MethodReport::d_invbeta)
      .def_readonly("max_pairwise_delta", &MethodReport::max_pairwise_delta)
      .def_readonly("reference_digits_matched", &MethodReport::reference_digits_matched)
      .def_readonly("methods", &MethodReport::methods)
      .def("all_succeeded", &MethodReport::all_succeeded);

  py::class_<oracle::MCEstimate>(m, "MCEstimate")
      .def_readonly("value", &oracle::MCEstimate::value)
      .def_readonly("std_error", &oracle::MCEstimate::std_error)
      .def_readonly("samples", &oracle::MCEstimate::samples)
      .def_readonly("hits", &oracle::MCEstimate::hits)
      .def_readonly("seed", &oracle::MCEstimate::seed)
      .def_readonly("box_area", &oracle::MCEstimate::box_area);

  // special functions
  m.def("bessel_j", &bessel_j, py::arg("n"), py::arg("x"));
  m.def(
      "kepler_e",
      [](double a, double x, KeplerMethod method, int terms, double tol, int max_iterations) {
        const KeplerQuery q{a, x};
        return method == KeplerMethod::series
                   ? kepler_e_series(q, terms)
                   : kepler_e_newton(q, make_tol(tol, max_iterations));
      },
      py::arg("a"), py::arg("x"), py::arg("method") = KeplerMethod::newton,
      py::arg("terms") = 50, py::arg("tol") = 1e-14, py::arg("max_iterations") = 200);
  m.def("ln_gamma", &ln_gamma, py::arg("x"));
  m.def(
      "beta_complete", [](double a, double b) { return beta_complete({a, b}); },
      py::arg("a"), py::arg("b"));
  m.def(
      "beta_incomplete",
      [](double x, double a, double b) { return beta_incomplete(x, {a, b}); }, py::arg("x"),
      py::arg("a"), py::arg("b"));
  m.def(
      "beta_regularized",
      [](double x, double a, double b) { return beta_regularized(x, {a, b}); }, py::arg("x"),
      py::arg("a"), py::arg("b"));
  m.def(
      "beta_regularized_inverse",
      [](double z, double a, double b, double tol, int max_iterations) {
        return beta_regularized_inverse(z, {a, b}, make_tol(tol, max_iterations));
      },
      py::arg("z"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-14,
      py::arg("max_iterations") = 200);
  m.def("hav", &hav, py::arg("x"));
  m.def("archav", &archav, py::arg("h"));

  // geometry
  m.def(
      "segment_area", [](double R, double h) { return segment_area({R, h}); }, py::arg("R"),
      py::arg("h"));
  m.def(
      "lens_area", [](double R, double r, double d) { return lens_area({R, r, d}); },
      py::arg("R"), py::arg("r"), py::arg("d"));
  m.def(
      "intersection_abscissae",
      [](double R, double r, double d) {
        const Abscissae ab = intersection_abscissae({R, r, d});
        return py::make_tuple(ab.d1, ab.d2);
      },
      py::arg("R"), py::arg("r"), py::arg("d"));
  m.def("half_overlap_gap", &half_overlap_gap, py::arg("d"));

  // solver
  m.def(
      "solve_offset",
      [](double R, double r, std::optional<double> area, std::optional<double> fraction,
         double tol, int max_iterations) {
        if (area.has_value() == fraction.has_value()) {
          throw DomainError("exactly one of area and fraction must be given");
        }
        const Tolerance t = make_tol(tol, max_iterations);
        return area ? solve_offset({R, r, AreaTarget{*area}, t})
                    : solve_offset({R, r, FractionTarget{*fraction}, t});
      },
      py::arg("R"), py::arg("r"), py::kw_only(), py::arg("area") = py::none(),
      py::arg("fraction") = py::none(), py::arg("tol") = 1e-14,
      py::arg("max_iterations") = 200);
  m.def(
      "dha_report",
      [](double tol, int max_iterations) { return dha_report(make_tol(tol, max_iterations)); },
      py::arg("tol") = 1e-14, py::arg("max_iterations") = 200);
  m.def("digits_matched", &digits_matched, py::arg("value"));
  m.attr("HALF_AREA_OFFSET_LITERAL") = std::string(kHalfAreaOffsetLiteral);
  m.attr("HALF_AREA_OFFSET") = half_area_offset_reference();

  // oracles
  m.def(
      "lens_area_montecarlo",
      [](double R, double r, double d, std::uint64_t samples, std::uint64_t seed,
         unsigned threads) {
        oracle::MonteCarloOptions opts;
        opts.threads = threads;
        return oracle::lens_area_montecarlo({R, r, d}, samples, seed, opts);
      },
      py::arg("R"), py::arg("r"), py::arg("d"), py::arg("samples") = 1000000,
      py::arg("seed") = 0, py::arg("threads") = 1);
  m.def(
      "lens_area_quadrature",
      [](double R, double r, double d, int panels) {
        return oracle::lens_area_quadrature({R, r, d}, panels);
      },
      py::arg("R"), py::arg("r"), py::arg("d"), py::arg("panels") = 4096);
}
