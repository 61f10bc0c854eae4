#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

#include "simulroots/certify.hpp"
#include "simulroots/driver.hpp"
#include "simulroots/errors.hpp"
#include "simulroots/io.hpp"
#include "simulroots/localize.hpp"
#include "simulroots/oracle.hpp"
#include "simulroots/simul.hpp"

namespace py = pybind11;
using namespace simulroots;

namespace {

// Coefficients c_0 .. c_{n-1} of the monic polynomial, constant term first.
MonicPolynomial poly(std::vector<Complex> coeffs) { return MonicPolynomial(std::move(coeffs)); }

CertificateKind kind_named(const std::string& name) {
  if (name == "localization") return CertificateKind::localization;
  return certificate_kind_for(parse_method(name));
}

// JSON documents cross the boundary as text and are decoded on the Python side.
std::string dump(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simultaneous polynomial root-finding with semilocal convergence certificates";

  static py::exception<Error> error(m, "SimulrootsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("eval", [](std::vector<Complex> c, Complex x) { return eval(poly(std::move(c)), x); },
        py::arg("coeffs"), py::arg("x"));

  m.def(
      "weierstrass_corrections",
      [](std::vector<Complex> c, std::vector<Complex> z) {
        return weierstrass_corrections(poly(std::move(c)), ApproximationVector(std::move(z)));
      },
      py::arg("coeffs"), py::arg("z"));

  m.def(
      "quality",
      [](std::vector<Complex> c, std::vector<Complex> z, double p) {
        return quality_E(poly(std::move(c)), ApproximationVector(std::move(z)), NormParameter(p));
      },
      py::arg("coeffs"), py::arg("z"), py::arg("p") = INFINITY);

  m.def(
      "step",
      [](const std::string& method, std::vector<Complex> c, std::vector<Complex> z) {
        const auto out = step(parse_method(method), poly(std::move(c)), ApproximationVector(std::move(z)));
        const auto pts = out.z.points();
        return std::vector<Complex>(pts.begin(), pts.end());
      },
      py::arg("method"), py::arg("coeffs"), py::arg("z"));

  m.def(
      "phi",
      [](const std::string& kind, double x, int n, double p) {
        return phi(kind_named(kind), x, MethodParams::make(n, NormParameter(p)));
      },
      py::arg("kind"), py::arg("x"), py::arg("n"), py::arg("p") = INFINITY);

  m.def(
      "threshold",
      [](const std::string& kind, int n, double p) {
        return theorem_threshold(kind_named(kind), MethodParams::make(n, NormParameter(p)));
      },
      py::arg("kind"), py::arg("n"), py::arg("p") = INFINITY);

  m.def(
      "_certify",
      [](const std::string& kind, std::vector<Complex> c, std::vector<Complex> z, double p,
         bool pessimistic) {
        return dump(io::certificate_to_json(certify(kind_named(kind), poly(std::move(c)),
                                                    ApproximationVector(std::move(z)),
                                                    NormParameter(p), {.pessimistic = pessimistic})));
      },
      py::arg("kind"), py::arg("coeffs"), py::arg("z"), py::arg("p"), py::arg("pessimistic"));

  m.def(
      "inclusion_disks",
      [](std::vector<Complex> c, std::vector<Complex> z, double p) {
        std::vector<std::pair<Complex, double>> out;
        for (const auto& d :
             inclusion_disks(poly(std::move(c)), ApproximationVector(std::move(z)), NormParameter(p))) {
          out.emplace_back(d.center, d.radius);
        }
        return out;
      },
      py::arg("coeffs"), py::arg("z"), py::arg("p") = INFINITY);

  m.def(
      "_solve",
      [](std::vector<Complex> c, std::optional<std::vector<Complex>> z, const std::string& method,
         double p, double tol, int max_iters, const std::string& stop, bool oracle) {
        const auto f = poly(std::move(c));
        RunConfig cfg;
        cfg.method = parse_method(method);
        cfg.norm = NormParameter(p);
        cfg.tol = tol;
        cfg.max_iters = max_iters;
        cfg.stop = parse_stop_rule(stop);
        cfg.oracle = oracle;
        const auto z0 = z ? ApproximationVector(std::move(*z)) : default_initial_point(f);
        py::gil_scoped_release release;
        return dump(trace_to_json(run_solve(f, z0, cfg)));
      },
      py::arg("coeffs"), py::arg("z"), py::arg("method"), py::arg("p"), py::arg("tol"),
      py::arg("max_iters"), py::arg("stop"), py::arg("oracle"));

  m.def(
      "reference_roots",
      [](std::vector<Complex> c, int bits) {
        return reference_roots(poly(std::move(c)), {.precision_bits = bits}).roots;
      },
      py::arg("coeffs"), py::arg("precision_bits") = 0);

  m.def(
      "compare_csv",
      [](int lo, int hi, double p) { return compare_to_csv(compare_table(lo, hi, NormParameter(p))); },
      py::arg("n_lo") = 3, py::arg("n_hi") = 30, py::arg("p") = INFINITY);

  m.def("_constants", [] { return dump(constants_json()); });
}
