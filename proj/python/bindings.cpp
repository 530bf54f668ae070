#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stieltjes/stieltjes.hpp"

namespace py = pybind11;
using namespace stieltjes;

namespace {

template <class T>
py::dict result_dict(const RSResultT<T>& r) {
  py::list levels;
  for (const auto& l : r.levels)
    levels.append(py::dict(py::arg("k") = l.k, py::arg("mesh") = l.mesh, py::arg("cells") = l.cells,
                           py::arg("sum") = l.sum, py::arg("spread") = l.spread));
  return py::dict(py::arg("value") = r.value, py::arg("est_error") = r.est_error,
                  py::arg("status") = to_string(r.status), py::arg("levels") = levels);
}

template <class T>
py::dict pv_dict(const PVResultT<T>& r) {
  return py::dict(py::arg("value") = r.value, py::arg("est_error") = r.est_error,
                  py::arg("converged") = r.converged, py::arg("extrapolated") = r.extrapolated,
                  py::arg("eps_trace") = r.eps_trace);
}

TransformOptions transform_options(std::optional<double> rel_tol, std::uint64_t seed) {
  TransformOptions o;
  if (rel_tol) o.quadrature.rel_tol = *rel_tol;
  o.quadrature.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Riemann-Stieltjes quadrature and Stieltjes transforms on the unit disk";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

  py::class_<BoundaryFunction>(m, "BoundaryFunction")
      .def_property_readonly("name", &BoundaryFunction::name)
      .def_property_readonly("periodic", &BoundaryFunction::periodic)
      .def("__call__", &BoundaryFunction::eval)
      .def("eval", &BoundaryFunction::eval)
      .def("unwrapped", &BoundaryFunction::unwrapped)
      .def("rise", &BoundaryFunction::rise)
      .def("derivative", &BoundaryFunction::derivative)
      .def("jumps", [](const BoundaryFunction& f) {
        std::vector<std::pair<double, double>> out;
        for (const auto& j : f.jumps()) out.emplace_back(j.t, j.height);
        return out;
      });

  m.def("zoo", [](const std::string& name, const std::vector<std::string>& params) { return lookup(name, params).fn; },
        py::arg("name"), py::arg("params") = std::vector<std::string>{});
  m.def("catalog", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : catalog()) out.emplace_back(e.name, e.variation, e.description);
    return out;
  });
  m.def("parse_spec", [](const std::string& spec) { return parse_function_spec(spec).periodic(); });
  m.def("step", [](const std::vector<std::pair<double, double>>& jumps, double base) {
    std::vector<Jump> js;
    for (const auto& [t, h] : jumps) js.push_back({t, h});
    return BoundaryFunction::step("step", js, base);
  }, py::arg("jumps"), py::arg("base") = 0.0);
  m.def("cantor", &BoundaryFunction::cantor, py::arg("depth") = 24);

  m.def("rs_integral",
        [](const RealFn& g, const RealFn& f, double a, double b, double rel_tol, double abs_tol, int min_level,
           int max_level, std::uint64_t seed, std::vector<double> integrand_jumps, std::vector<double> integrator_jumps) {
          RSOptions o;
          o.rel_tol = rel_tol;
          o.abs_tol = abs_tol;
          o.min_level = min_level;
          o.max_level = max_level;
          o.seed = seed;
          o.discontinuities = {std::move(integrand_jumps), std::move(integrator_jumps)};
          return result_dict(rs_integral<double>(g, f, a, b, o));
        },
        py::arg("g"), py::arg("f"), py::arg("a"), py::arg("b"), py::arg("rel_tol") = 1e-8, py::arg("abs_tol") = 1e-12,
        py::arg("min_level") = 4, py::arg("max_level") = 18, py::arg("seed") = 0,
        py::arg("integrand_jumps") = std::vector<double>{}, py::arg("integrator_jumps") = std::vector<double>{});

  m.def("poisson", &poisson, py::arg("r"), py::arg("Theta"));
  m.def("poisson_dtheta", &poisson_dtheta, py::arg("r"), py::arg("Theta"));
  m.def("conj_poisson", &conj_poisson, py::arg("r"), py::arg("Theta"));
  m.def("conj_poisson_dt", &conj_poisson_dt, py::arg("r"), py::arg("Theta"));
  m.def("analytic_kernel", [](double t, double r, double theta) { return analytic_kernel(t, DiskPoint(r, theta)); },
        py::arg("t"), py::arg("r"), py::arg("theta"));
  m.def("boundary_cot_kernel", &boundary_cot_kernel, py::arg("tau"), py::arg("t"));

  m.def("transform",
        [](const BoundaryFunction& phi, const std::string& which, double r, double theta,
           std::optional<double> rel_tol, std::uint64_t seed) {
          return result_dict(transform(phi, parse_which(which), DiskPoint(r, theta), transform_options(rel_tol, seed)));
        },
        py::arg("phi"), py::arg("which"), py::arg("r"), py::arg("theta"), py::arg("rel_tol") = py::none(),
        py::arg("seed") = 0);
  m.def("duality_residual",
        [](const BoundaryFunction& phi, double r, double theta) { return duality_residual(phi, DiskPoint(r, theta)); },
        py::arg("phi"), py::arg("r"), py::arg("theta"));

  m.def("hilbert", [](const BoundaryFunction& phi, double tau) { return pv_dict(hilbert_stieltjes(phi, tau)); },
        py::arg("phi"), py::arg("tau"));
  m.def("singular_cauchy",
        [](const BoundaryFunction& phi, double tau) { return pv_dict(singular_cauchy_stieltjes(phi, tau)); },
        py::arg("phi"), py::arg("tau"));
  m.def("corollary10_residual", [](const BoundaryFunction& phi, double tau) { return corollary10_residual(phi, tau); },
        py::arg("phi"), py::arg("tau"));

  m.def("limit_check",
        [](const BoundaryFunction& phi, const std::string& theorem, const std::vector<double>& angles, double tol) {
          LimitOptions o;
          o.tol = tol;
          CheckReport rep = theorem == "1"   ? theorem1_check(phi, angles, o)
                            : theorem == "2" ? theorem2_check(phi, angles, o)
                                             : corollary8_check(phi, angles, o);
          py::list rows;
          for (const auto& row : rep.rows)
            rows.append(py::dict(py::arg("quantity") = row.quantity, py::arg("angle") = row.angle,
                                 py::arg("approach") = row.approach, py::arg("expected") = row.expected,
                                 py::arg("limit") = row.estimate.extrapolated, py::arg("residual") = row.residual,
                                 py::arg("grade") = to_string(row.grade)));
          return py::dict(py::arg("check") = rep.check, py::arg("rows") = rows,
                          py::arg("overall") = to_string(rep.overall()));
        },
        py::arg("phi"), py::arg("theorem"), py::arg("angles"), py::arg("tol") = 1e-3);
}
