#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "unif/abelian_metrics.hpp"
#include "unif/curves.hpp"
#include "unif/inversion.hpp"
#include "unif/report.hpp"

namespace py = pybind11;
using namespace unif;

namespace {

py::list check_list(const CheckTable& t) {
  py::list out;
  for (const auto& r : t) {
    py::dict d;
    d["name"] = r.name;
    d["residual"] = r.residual;
    d["tol"] = r.tol;
    d["pass"] = r.pass();
    d["informational"] = r.informational;
    d["note"] = r.note;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Theta constants, Fuchsian equations, inversion and the quintic";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.def("theta2", [](cplx t) { return theta2(t); }, py::arg("tau"));
  m.def("theta3", [](cplx t) { return theta3(t); }, py::arg("tau"));
  m.def("theta4", [](cplx t) { return theta4(t); }, py::arg("tau"));
  m.def("eta", [](cplx t) { return dedekind_eta(t); }, py::arg("tau"));
  m.def("klein_j", [](cplx t) { return klein_j(t); }, py::arg("tau"));
  m.def("eisenstein", [](cplx t) {
    auto e = eisenstein(t);
    return py::dict(py::arg("g2") = e.g2, py::arg("g3") = e.g3, py::arg("J") = e.J);
  }, py::arg("tau"));
  m.def("legendre_moduli", [](cplx t) {
    auto k = legendre_moduli(t);
    return std::make_pair(k.k, k.kp);
  }, py::arg("tau"));
  m.def("ellip_K", &ellip_K, py::arg("k"));
  m.def("ellip_Kp", &ellip_Kp, py::arg("k"));
  m.def("chi_b", &chi_b, py::arg("tau"));

  m.def("invert_chi", [](cplx a) {
    auto r = invert_chi(a);
    py::dict d;
    d["marker"] = r.marker;
    d["tau0"] = r.tau0 ? py::cast(cplx(*r.tau0)) : py::none();
    d["residual"] = r.residual;
    d["j_residual"] = r.j_residual;
    d["orbit"] = r.orbit;
    return d;
  }, py::arg("a"));

  m.def("quintic_solve", [](cplx a) {
    auto s = quintic_solve(a);
    py::dict d;
    d["roots"] = s.roots;
    d["tau_star"] = s.tau_star;
    d["poly_residuals"] = s.poly_residuals;
    d["vieta"] = s.vieta;
    d["theta_residual"] = s.theta_residual;
    return d;
  }, py::arg("a"));

  m.def("run_suite", [](const std::string& suite, int samples, std::uint64_t seed) {
    return check_list(run_suite(suite, {samples, seed}));
  }, py::arg("suite"), py::arg("samples") = -1, py::arg("seed") = 1);
  m.attr("suites") = kSuites;

  m.def("curve_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
  });
  m.def("curve_residual", [](const std::string& id, const std::vector<cplx>& taus) {
    return curve_residual(id, taus).max_residual;
  }, py::arg("id"), py::arg("taus"));
  m.def("discriminant", [](const std::string& poly) { return discriminant_y(Poly2::parse(poly)).str(); },
        py::arg("poly"));
  m.def("seeded_points", [](std::uint64_t seed, int n, double re_lo, double re_hi, double im_lo, double im_hi) {
    return seeded_points(seed, n, Box{re_lo, re_hi, im_lo, im_hi});
  }, py::arg("seed"), py::arg("n"), py::arg("re_lo") = -1.0, py::arg("re_hi") = 1.0, py::arg("im_lo") = 0.4,
        py::arg("im_hi") = 2.5);

  m.def("polygon_json", [](int genus, bool doubled) {
    auto p = default_polygon(genus);
    if (doubled) p = doubled_polygon(p);
    return emit_polygon(p).dump();
  }, py::arg("genus"), py::arg("doubled") = false);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "unif");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int st = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(st, out.str(), err.str());
  }, py::arg("args"));
}
