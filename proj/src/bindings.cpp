#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/ballquad.hpp"
#include "bergman/classify.hpp"
#include "bergman/operators.hpp"
#include "bergman/spectral.hpp"
#include "bergman/verify.hpp"

namespace py = pybind11;
using namespace bergman;

namespace {

std::string tri_name(classify::Tri t) {
  switch (t) {
    case classify::Tri::Yes: return "yes";
    case classify::Tri::No: return "no";
    default: return "unknown";
  }
}

}  // namespace

PYBIND11_MODULE(_bergman, m) {
  m.doc() = "Spectral toolkit for Bergman-type integral operators";

  py::register_exception<BergmanError>(m, "BergmanError");

  m.def(
      "eigenvalue",
      [](double alpha, int dim, std::uint64_t n) {
        return spectral::eigenvalue(spectral::OperatorParams::make(alpha, dim),
                                    n);
      },
      py::arg("alpha"), py::arg("dim"), py::arg("n"),
      "Degree-n eigenvalue of the holomorphic kernel operator");

  m.def("multiplicity", &spectral::multiplicity, py::arg("dim"), py::arg("n"),
        "Dimension of the space of degree-n holomorphic homogeneous "
        "polynomials");

  m.def(
      "singular_values",
      [](double alpha, int dim, std::uint64_t count) {
        const auto s = spectral::singular_values(
            spectral::OperatorParams::make(alpha, dim), count);
        std::vector<std::pair<double, std::uint64_t>> out;
        out.reserve(s.values.size());
        for (const auto& e : s.values) out.emplace_back(e.value, e.degree);
        return out;
      },
      py::arg("alpha"), py::arg("dim"), py::arg("count"),
      "Non-increasing (value, degree) pairs counted with multiplicity");

  m.def(
      "schatten_sum",
      [](double alpha, int dim, double p) {
        const auto s = spectral::schatten_sum(
            spectral::OperatorParams::make(alpha, dim), p);
        return py::make_tuple(s.converged,
                              s.converged ? py::cast(s.value) : py::none());
      },
      py::arg("alpha"), py::arg("dim"), py::arg("p"),
      "(converged, value) of the Schatten p-sum");

  m.def(
      "schatten_macaev",
      [](double alpha, int dim, double p) {
        const auto v = classify::schatten_macaev(alpha, dim, p);
        py::dict d;
        d["schatten"] = v.schatten;
        d["macaev"] = v.macaev;
        d["not_compact"] = v.not_compact;
        if (!v.not_compact) d["hausdorff_dim"] = v.hausdorff_dim;
        return d;
      },
      py::arg("alpha"), py::arg("dim"), py::arg("p"),
      "Schatten / Macaev class membership");

  m.def(
      "dixmier_trace",
      [](double alpha, int dim, std::uint64_t k_max) {
        return spectral::dixmier_trace_estimate(
                   spectral::OperatorParams::make(alpha, dim), k_max)
            .extrapolated;
      },
      py::arg("alpha"), py::arg("dim"), py::arg("k_max") = 1000000,
      "Extrapolated Dixmier trace estimate");

  m.def("trace_formula", &ballquad::trace_formula, py::arg("alpha"),
        py::arg("dim"), "Closed-form trace for alpha < 1");

  m.def(
      "fr_series",
      [](double c, double t, double r, int dim) {
        return ballquad::fr_series({c, t, r}, dim);
      },
      py::arg("c"), py::arg("t"), py::arg("r"), py::arg("dim"),
      "Forelli-Rudin integral by hypergeometric series");

  m.def("berezin_closed", &ballquad::berezin_closed, py::arg("alpha"),
        py::arg("dim"), py::arg("r"),
        "Closed-form Berezin transform at radius r");

  m.def(
      "compactness",
      [](const std::string& alpha, int dim, const std::string& p,
         const std::string& q, const std::string& kind) {
        const auto v = classify::compactness(
            classify::parse_rational(alpha), dim, classify::parse_exponent(p),
            classify::parse_exponent(q),
            kind == "kplus" ? classify::Kind::Kplus : classify::Kind::K);
        py::dict d;
        d["compact"] = v.compact ? "yes" : "no";
        d["bounded"] = tri_name(v.bounded);
        d["rule"] = v.rule;
        return d;
      },
      py::arg("alpha"), py::arg("dim"), py::arg("p"), py::arg("q"),
      py::arg("kind") = "k",
      "L^p-L^q compactness verdict; accepts 'inf' and exact 'a/b' inputs");

  m.def(
      "nystrom_eigenvalues",
      [](double alpha, int dim, int radial, int angular) {
        const auto grid = operators::make_point_grid(dim, radial, angular);
        return operators::eigensolve(operators::nystrom_assemble(
            spectral::OperatorParams::make(alpha, dim), grid,
            operators::KernelKind::Holomorphic));
      },
      py::arg("alpha"), py::arg("dim"), py::arg("radial") = 4,
      py::arg("angular") = 64,
      "Nystrom |eigenvalues| on a product quadrature grid");

  m.def(
      "run_suite",
      [](const std::string& suite) {
        const auto rep = verify::run_suite(suite);
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["value"] = c.value;
          d["target"] = c.target;
          d["tolerance"] = c.tolerance;
          d["detail"] = c.detail;
          checks.append(d);
        }
        return py::make_tuple(rep.all_pass(), checks);
      },
      py::arg("suite") = "all", "Run a verification suite");
}
