#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "casson3/enumerate.hpp"
#include "casson3/family.hpp"
#include "casson3/report.hpp"
#include "casson3/su2.hpp"

namespace py = pybind11;
using namespace casson3;

namespace {

std::pair<i64, i64> frac(const Rational& x) { return {x.numerator(), x.denominator()}; }

EngineOptions options(unsigned threads, bool breakdown, bool throw_on_tight) {
  EngineOptions opt;
  opt.threads = threads;
  opt.keep_slices = breakdown;
  opt.throw_on_tight = throw_on_tight;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_casson3, m) {
  m.doc() = "SU(3) Casson invariants of Brieskorn spheres";

  py::register_exception<Error>(m, "CassonError", PyExc_ValueError);

  py::class_<Totals>(m, "Totals")
      .def_readonly("n_ia", &Totals::n_ia)
      .def_readonly("n_iia", &Totals::n_iia)
      .def_readonly("n_iib", &Totals::n_iib)
      .def_readonly("n_excluded", &Totals::n_excluded)
      .def_readonly("n_central", &Totals::n_central)
      .def_readonly("n_tight", &Totals::n_tight);

  py::class_<CassonResult>(m, "CassonResult")
      .def_property_readonly("p", [](const CassonResult& r) { return r.surgery.p; })
      .def_property_readonly("q", [](const CassonResult& r) { return r.surgery.q; })
      .def_property_readonly("r", [](const CassonResult& r) { return r.surgery.r; })
      .def_property_readonly("framing", [](const CassonResult& r) { return std::make_pair(r.surgery.a, r.surgery.c); })
      .def_readonly("tau", &CassonResult::tau)
      .def_readonly("totals", &CassonResult::totals)
      .def_property_readonly("census",
                             [](const CassonResult& r) { return std::make_pair(r.census.n_type_i, r.census.n_type_ii); })
      .def_readonly("lattice_points", &CassonResult::lattice_points)
      .def("to_json", [](const CassonResult& r) { return to_json(r).dump(); })
      .def("__repr__", [](const CassonResult& r) {
        std::ostringstream os;
        os << "CassonResult(p=" << r.surgery.p << ", q=" << r.surgery.q << ", r=" << r.surgery.r << ", tau=" << r.tau
           << ")";
        return os.str();
      });

  m.def(
      "tau",
      [](i64 p, i64 q, i64 r, unsigned threads, bool breakdown, bool throw_on_tight) {
        py::gil_scoped_release release;
        return tau(p, q, r, options(threads, breakdown, throw_on_tight));
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("threads") = 1, py::arg("breakdown") = false,
      py::arg("throw_on_tight") = true);

  m.def(
      "family_tau",
      [](i64 p, i64 q, i64 mm, i64 n_first, i64 n_last, unsigned threads) {
        py::gil_scoped_release release;
        std::vector<std::pair<i64, i64>> out;
        for (const auto& s : family_tau(FamilySpec{p, q, mm}, n_first, n_last, options(threads, false, true))) {
          out.emplace_back(s.n, s.tau);
        }
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n_first"), py::arg("n_last"), py::arg("threads") = 1);

  m.def(
      "fit_quadratic",
      [](const std::vector<std::pair<i64, i64>>& samples) {
        std::vector<FamilySample> s;
        for (const auto& [n, t] : samples) s.push_back({n, t});
        const QuadraticFit f = fit_quadratic(s);
        return std::make_tuple(frac(f.A), frac(f.B), frac(f.C));
      },
      py::arg("samples"));

  m.def("conway_leading_coeff", [](i64 p, i64 q) { return frac(conway_leading_coeff(p, q)); });
  m.def("b_coefficient_formula", [](i64 p, i64 q) { return frac(b_coefficient_formula(p, q)); });

  m.def("count_pointed_spheres",
        [](i64 p, i64 q, i64 r) { return count_pointed_spheres(normalize_mod3(make_surgery_data(p, q, r))); });
  m.def("count_type_Ib",
        [](i64 p, i64 q, i64 r) { return count_type_Ib(normalize_mod3(make_surgery_data(p, q, r))); });

  m.def("component_census", [](i64 p, i64 q, i64 r) {
    const Census c = component_census(p, q, r);
    return std::make_pair(c.n_type_i, c.n_type_ii);
  });

  m.def("root_classes", [](i64 p, int ell, int a_mod3) {
    std::vector<std::tuple<i64, i64, i64, i64>> out;
    for (const AlcovePoint& x : root_classes(p, ell, a_mod3)) out.emplace_back(x.k1, x.k2, x.k3, x.denom);
    return out;
  });
}
