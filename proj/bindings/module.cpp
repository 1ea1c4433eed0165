#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riesz/errors.hpp"
#include "riesz/experiment.hpp"
#include "riesz/filter.hpp"
#include "riesz/reference.hpp"
#include "riesz/special.hpp"
#include "riesz/spectral.hpp"
#include "riesz/stencil.hpp"

namespace py = pybind11;

namespace {

riesz::Filter make_filter(double alpha, int order) {
  return riesz::build_filter(riesz::FilterSpec(alpha, order));
}

py::list table_rows(const riesz::ErrorTable& t) {
  py::list rows;
  for (int i = 0; i <= t.schedule.i_max; ++i)
    for (int N : t.orders) {
      py::object r = i < t.schedule.i_max ? py::float_(t.rate(i, N))
                                          : py::object(py::none());
      rows.append(py::make_tuple(i, N, t.E.at({i, N}), r));
    }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arbitrary-order central-difference stencils for the Riesz "
            "fractional derivative";

  py::register_exception<riesz::validation_error>(m, "ValidationError",
                                                  PyExc_ValueError);
  py::register_exception<riesz::instability_error>(m, "InstabilityError",
                                                   PyExc_ArithmeticError);
  py::register_exception<riesz::convergence_error>(m, "ConvergenceError",
                                                   PyExc_ArithmeticError);

  m.def("gamma", &riesz::gamma_fn, py::arg("x"));
  m.def("hyp1f2_regularized", &riesz::hyp1f2_regularized, py::arg("a"),
        py::arg("b1"), py::arg("b2"), py::arg("z"), py::arg("max_terms") = 500);

  m.def(
      "build_filter",
      [](double alpha, int order) { return make_filter(alpha, order).g; },
      py::arg("alpha"), py::arg("order"),
      "Prefilter taps g_0..g_{N_h} for G(x) = g_0 + 2 sum g_m cos(m x)");

  m.def(
      "build_stencil",
      [](double alpha, int order, int nodes) {
        return riesz::build_stencil(make_filter(alpha, order),
                                    riesz::GridSpec(nodes))
            .values;
      },
      py::arg("alpha"), py::arg("order"), py::arg("nodes"),
      "One-sided filtered stencil k_0..k_{N_x-2}");

  m.def(
      "apply_operator",
      [](double alpha, int order, const std::vector<double>& samples) {
        riesz::GridSpec grid(static_cast<int>(samples.size()));
        auto st = riesz::build_stencil(make_filter(alpha, order), grid);
        return riesz::apply_operator(st, samples, samples.front(),
                                     samples.back());
      },
      py::arg("alpha"), py::arg("order"), py::arg("samples"),
      "Riesz derivative approximation at the interior nodes");

  m.def(
      "poly_riesz_exact",
      [](int q, double alpha, double x) {
        return riesz::poly_riesz_exact(riesz::PolynomialCase(q, alpha), x);
      },
      py::arg("q"), py::arg("alpha"), py::arg("x"));

  m.def(
      "cosine_riesz_exact",
      [](int f, double alpha, double x) {
        return riesz::cosine_riesz_exact(riesz::CosineCase(f, alpha), x);
      },
      py::arg("f"), py::arg("alpha"), py::arg("x"));

  m.def(
      "filter_response",
      [](double alpha, int order, double x) {
        return riesz::filter_response(make_filter(alpha, order), x);
      },
      py::arg("alpha"), py::arg("order"), py::arg("x"));

  m.def(
      "relative_response",
      [](double alpha, int order, double x) {
        return riesz::relative_response(make_filter(alpha, order), x);
      },
      py::arg("alpha"), py::arg("order"), py::arg("x"));

  m.def(
      "spectral_rate",
      [](double alpha, int order, double x) {
        return riesz::spectral_rate(make_filter(alpha, order), x);
      },
      py::arg("alpha"), py::arg("order"), py::arg("x"));

  m.def(
      "positivity_check",
      [](double alpha, int order) {
        auto rep = riesz::positivity_check(make_filter(alpha, order));
        return py::make_tuple(rep.dominant, rep.margin);
      },
      py::arg("alpha"), py::arg("order"),
      "(dominant, margin) of the Gershgorin test");

  m.def(
      "eigen_bound",
      [](double alpha, int order, int nodes) {
        auto st = riesz::build_stencil(make_filter(alpha, order),
                                       riesz::GridSpec(nodes));
        auto rep = riesz::eigen_bound_estimate(st);
        return py::make_tuple(rep.max_abs_eig, rep.bound, rep.within_bound);
      },
      py::arg("alpha"), py::arg("order"), py::arg("nodes"));

  m.def(
      "run_poly_experiment",
      [](int q, double alpha, const std::vector<int>& orders, int levels) {
        riesz::RefinementSchedule sched{11, levels - 1};
        return table_rows(riesz::run_poly_experiment(q, alpha, orders, sched));
      },
      py::arg("q"), py::arg("alpha"), py::arg("orders"), py::arg("levels") = 6,
      "Rows (i, N, E, R); R is None on the last level");

  m.def(
      "run_cosine_experiment",
      [](int f, double alpha, const std::vector<int>& orders, int levels) {
        riesz::RefinementSchedule sched{11, levels - 1};
        return table_rows(
            riesz::run_cosine_experiment(f, alpha, orders, sched));
      },
      py::arg("f"), py::arg("alpha"), py::arg("orders"), py::arg("levels") = 6);
}
