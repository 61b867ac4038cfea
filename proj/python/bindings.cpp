#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "lfock/berezin.hpp"
#include "lfock/convergence.hpp"
#include "lfock/fock.hpp"
#include "lfock/kernels.hpp"
#include "lfock/quadrature.hpp"
#include "lfock/specfun.hpp"
#include "lfock/squeeze.hpp"
#include "lfock/suites.hpp"
#include "lfock/symbolic.hpp"
#include "lfock/toeplitz.hpp"

namespace py = pybind11;
using namespace lfock;

namespace {

PolyFamily family(const std::string& name, double order) {
  if (name == "hermite") return PolyFamily::hermite();
  if (name == "laguerre") return PolyFamily::laguerre(order);
  if (name == "legendre") return PolyFamily::legendre();
  throw py::value_error("unknown family: " + name);
}

// {(a, b): coef} -> sum coef w^a conj(w)^b
SymbolPoly symbol(const std::map<std::pair<int, int>, cplx>& terms) {
  SymbolPoly f;
  for (const auto& [k, c] : terms) {
    if (k.first < 0 || k.second < 0) throw py::value_error("negative exponent in symbol");
    f.coeffs[k] += c;
  }
  return f;
}

py::dict kernel_dict(const KernelValue& v) {
  py::dict d;
  d["value"] = v.series_value;
  d["tail_bound"] = v.tail_bound;
  d["terms"] = v.terms_used;
  return d;
}

py::list rows_to_list(const std::vector<ReportRow>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["suite"] = r.suite;
    d["quantity"] = r.quantity;
    d["computed"] = r.computed;
    d["target"] = r.target;
    d["provenance"] = to_string(r.provenance);
    d["tolerance"] = r.tolerance;
    d["pass"] = r.pass;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_lfock, m) {
  m.doc() = "Laguerre-Fock quantization numerics";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  py::class_<QuantParams>(m, "QuantParams")
      .def(py::init<double>(), py::arg("epsilon"))
      .def_static("from_alpha_scale", &QuantParams::from_alpha_scale)
      .def_property_readonly("epsilon", &QuantParams::epsilon)
      .def_property_readonly("c", &QuantParams::c)
      .def_property_readonly("alpha_scale", &QuantParams::alpha_scale)
      .def_property_readonly("hbar", &QuantParams::hbar)
      .def("__repr__", [](const QuantParams& p) { return "QuantParams(" + std::to_string(p.epsilon()) + ")"; });

  m.def(
      "eval_poly",
      [](const std::string& fam, int n, cplx x, double order) { return eval_poly(family(fam, order), n, x); },
      py::arg("family"), py::arg("n"), py::arg("x"), py::arg("order") = 0.0);
  m.def("bessel_i", py::overload_cast<double, cplx>(&bessel_i), py::arg("order"), py::arg("x"));
  m.def("asym_coeff", &asym_coeff, py::arg("m"));

  m.def(
      "gauss_rule",
      [](const std::string& fam, int N, double order) {
        const auto r = gauss_rule(family(fam, order), N);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("family"), py::arg("N"), py::arg("order") = 0.0);

  m.def(
      "monomial_norm", [](double eps, int j, double order) { return monomial_norm(FockMeasure(QuantParams(eps), order), j); },
      py::arg("epsilon"), py::arg("j"), py::arg("order") = 0.0);

  m.def(
      "laguerre_kernel",
      [](double eps, cplx x, cplx y, double order) { return laguerre_kernel_closed(QuantParams(eps), order, x, y); },
      py::arg("epsilon"), py::arg("x"), py::arg("y"), py::arg("order") = 0.0);
  m.def(
      "hermite_kernel",
      [](double eps, double x, double y, double tol) { return kernel_dict(hermite_kernel_series(eps, x, y, tol)); },
      py::arg("epsilon"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-12);
  m.def(
      "legendre_kernel",
      [](double eps, cplx x, cplx y, double tol) { return kernel_dict(legendre_kernel_series(eps, x, y, tol)); },
      py::arg("epsilon"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-12);
  m.def(
      "fock_kernel", [](double eps, cplx z, cplx w, double order) { return fock_kernel(QuantParams(eps), order, z, w); },
      py::arg("epsilon"), py::arg("z"), py::arg("w"), py::arg("order") = 0.0);

  m.def(
      "toeplitz_matrix",
      [](double eps, const std::vector<cplx>& coeffs, const std::string& fam, int N, double order) {
        return toeplitz_matrix(QuantParams(eps), SymbolFn::polynomial(coeffs), family(fam, order), N).matrix;
      },
      py::arg("epsilon"), py::arg("coeffs"), py::arg("family"), py::arg("N"), py::arg("order") = 0.0,
      "Truncated Toeplitz matrix of a polynomial symbol given by monomial coefficients.");

  m.def(
      "squeeze_check",
      [](double eps, int n, int N) {
        const auto c = verify_theorem7(eps, n, N);
        py::dict d;
        d["deviation"] = c.deviation;
        d["working_dim"] = c.working_dim;
        d["target_leakage"] = c.target_leakage;
        return d;
      },
      py::arg("epsilon"), py::arg("n"), py::arg("N") = 80);

  m.def(
      "berezin",
      [](double eps, const std::map<std::pair<int, int>, cplx>& terms, cplx z, double tol) {
        return berezin_numeric(QuantParams(eps), symbol(terms), z, tol).value;
      },
      py::arg("epsilon"), py::arg("symbol"), py::arg("z"), py::arg("tol") = 1e-10,
      "Berezin transform of sum coef w^a conj(w)^b, the symbol given as {(a, b): coef}.");

  m.def(
      "q_operator",
      [](int m_order) {
        if (m_order < 0 || m_order > 6) throw py::value_error("order must be in 0..6");
        return q_series(m_order)[m_order].str();
      },
      py::arg("m"));

  m.def(
      "classify",
      [](const std::string& fam, const std::string& seq) {
        const Verdict v = classify(family(fam, 0.0), CoeffSeq::parse(seq));
        auto tri = [](Tri t) -> py::object {
          if (t == Tri::Indeterminate) return py::none();
          return py::bool_(t == Tri::True);
        };
        py::dict d;
        d["rkhs"] = tri(v.rkhs);
        d["entire_extension"] = tri(v.entire_extension);
        return d;
      },
      py::arg("family"), py::arg("seq"));

  m.def("suites", [] {
    py::list out;
    for (const auto& s : verify_suites()) out.append(py::make_tuple(s.id, s.criterion, s.summary));
    for (const auto& s : table_suites()) out.append(py::make_tuple(s.id, s.criterion, s.summary));
    return out;
  });

  m.def(
      "verify",
      [](const std::string& id, std::optional<std::vector<double>> eps, std::optional<double> order,
         std::optional<int> N, std::optional<int> M, std::optional<double> tol) {
        SuiteConfig cfg{eps, order, N, M, tol};
        const auto& suite = find_suite(id);
        std::vector<ReportRow> rows;
        {
          py::gil_scoped_release release;
          rows = suite.run(cfg);
        }
        return rows_to_list(rows);
      },
      py::arg("suite"), py::arg("eps") = py::none(), py::arg("order") = py::none(), py::arg("N") = py::none(),
      py::arg("M") = py::none(), py::arg("tol") = py::none(),
      "Runs a suite and returns its rows as dicts.");
}
