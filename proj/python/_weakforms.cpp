#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "report.hpp"
#include "weakforms/duality.hpp"
#include "weakforms/genfun.hpp"
#include "weakforms/spaces.hpp"
#include "weakforms/trace.hpp"
#include "weakforms/weak.hpp"

namespace py = pybind11;
using namespace weakforms;

namespace {

py::object fraction(const Rat &r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

py::list fractions(std::span<const Rat> cs) {
  py::list out;
  for (const auto &c : cs) {
    out.append(fraction(c));
  }
  return out;
}

py::tuple series(const QSeries &s) { return py::make_tuple(s.min_exp(), fractions(s.coefficients())); }

py::dict gaps_dict(int p, int k) {
  const auto g = gap_sets(p, k);
  py::dict d;
  d["miss_M"] = g.miss_m;
  d["miss_S"] = g.miss_s;
  d["c_M"] = g.c_m;
  d["c_S"] = g.c_s;
  d["m_max"] = g.m_max;
  d["s_max"] = g.s_max;
  d["dim_M"] = g.dim_m;
  d["dim_S"] = g.dim_s;
  return d;
}

py::dict duality_dict(const DualityReport &r) {
  py::list viol;
  for (const auto &v : r.violations) {
    viol.append(py::make_tuple(v.m, v.n, fraction(v.lhs), fraction(v.rhs)));
  }
  py::dict d;
  d["m_range"] = py::make_tuple(r.m_lo, r.m_hi);
  d["n_range"] = py::make_tuple(r.n_lo, r.n_hi);
  d["checked"] = r.checked;
  d["violations"] = viol;
  d["decomposition_checked"] = r.decomposition_checked;
  d["decomposition_failures"] = r.decomposition_failures;
  d["pass"] = r.pass();
  return d;
}

py::dict genfun_dict(const GenFunReport &r) {
  py::dict d;
  d["n0"] = r.params.n0;
  d["gap_case"] = r.params.gap_case;
  d["z_last"] = r.z_last;
  d["tau_last"] = r.tau_last;
  d["numerator_products"] = r.numerator_products;
  d["coefficients_checked"] = r.coefficients_checked;
  d["nonzero"] = r.nonzero;
  d["max_abs_residual"] = fraction(r.max_abs_residual);
  d["pass"] = r.pass();
  return d;
}

} // namespace

PYBIND11_MODULE(_weakforms, m) {
  m.doc() = "Exact weakly holomorphic modular forms of prime level";

  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<RankError>(m, "RankError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("genus", &genus, py::arg("p"));
  m.def("dim_S", &dim_S, py::arg("p"), py::arg("k"));
  m.def("dim_E", &dim_E, py::arg("p"), py::arg("k"));
  m.def("dim_M", &dim_M, py::arg("p"), py::arg("k"));
  m.def("lambda_p", &lambda_p, py::arg("p"));
  m.def("hurwitz", [](long n) { return fraction(hurwitz(n)); }, py::arg("n"));
  m.def("trace_tn", [](int p, int k, long n) { return fraction(trace_tn(p, k, n)); },
        py::arg("p"), py::arg("k"), py::arg("n"));
  m.def("gap_sets", &gaps_dict, py::arg("p"), py::arg("k"));
  m.def("ahlgren_bound", [](int p, int k) { return fraction(ahlgren_bound(p, k)); },
        py::arg("p"), py::arg("k"));
  m.def("gap_count_bound", &gap_count_bound, py::arg("p"), py::arg("k"));

  py::class_<WeakBasis>(m, "WeakBasis")
      .def_readonly("p", &WeakBasis::p)
      .def_readonly("k", &WeakBasis::k)
      .def_readonly("max_pole", &WeakBasis::max_pole)
      .def_readonly("prec_cap", &WeakBasis::prec_cap)
      .def_readonly("ell", &WeakBasis::ell)
      .def_property_readonly("space", [](const WeakBasis &b) { return to_string(b.space); })
      .def("index_set", &WeakBasis::index_set)
      .def("has", &WeakBasis::has, py::arg("m"))
      .def("element", [](const WeakBasis &b, int idx) { return series(b.element(idx)); }, py::arg("m"),
           "(min_exp, coefficients) of the element q^-m + ...")
      .def("coefficient", [](const WeakBasis &b, int idx, int n) { return fraction(coefficient(b, idx, n)); },
           py::arg("m"), py::arg("n"))
      .def("__len__", [](const WeakBasis &b) { return b.elements.size(); });

  m.def(
      "weak_basis",
      [](int p, int k, const std::string &space, int max_pole, int prec_cap) {
        return weak_basis(p, k, parse_space(space), max_pole, prec_cap);
      },
      py::arg("p"), py::arg("k"), py::arg("space"), py::arg("max_pole"), py::arg("prec_cap"));

  m.def(
      "index_set_predicted",
      [](int p, int k, const std::string &space, int lo, int hi) {
        return index_set_predicted(p, k, parse_space(space)).members(lo, hi);
      },
      py::arg("p"), py::arg("k"), py::arg("space"), py::arg("lo"), py::arg("hi"));

  m.def(
      "duality_check",
      [](int p, int k, int box, bool decomposition) {
        return duality_dict(duality_check_box(p, k, box, decomposition));
      },
      py::arg("p"), py::arg("k"), py::arg("box") = 40, py::arg("decomposition") = false);

  m.def(
      "genfun_check",
      [](int p, int k, int j, int i, const std::string &variant) {
        return genfun_dict(genfun_check(p, k, j, i, parse_variant(variant)));
      },
      py::arg("p"), py::arg("k"), py::arg("j") = 15, py::arg("i") = 15, py::arg("variant") = "f");

  m.def("recurrence_check", &recurrence_check, py::arg("p"), py::arg("k"), py::arg("n"),
        py::arg("prec") = 20);

  m.def(
      "_run",
      [](const std::string &command, std::optional<int> p, std::optional<int> k,
         std::optional<std::pair<int, int>> k_range, const std::string &space, std::optional<int> mmax,
         int box, std::pair<int, int> window, std::optional<int> prec, const std::string &variant, int count) {
        cli::RunConfig cfg;
        cfg.command = command;
        cfg.p = p;
        cfg.k = k;
        cfg.k_range = k_range;
        cfg.space = space;
        cfg.mmax = mmax;
        cfg.box = box;
        cfg.window = window;
        cfg.prec = prec;
        cfg.variant = variant;
        cfg.count = count;
        py::gil_scoped_release release;
        return cli::run(cfg).dump();
      },
      py::arg("command"), py::arg("p"), py::arg("k") = py::none(), py::arg("k_range") = py::none(),
      py::arg("space") = "M", py::arg("mmax") = py::none(), py::arg("box") = 40,
      py::arg("window") = std::pair<int, int>{15, 15}, py::arg("prec") = py::none(),
      py::arg("variant") = "both", py::arg("count") = 20);
}
