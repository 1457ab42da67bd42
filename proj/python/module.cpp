// Python bindings for the main operations: partition functions, one-point
// functions, enumeration oracles, single-path counts, asymptotic closed
// forms and arctic-curve sampling. Values cross the boundary as doubles
// (with _str variants carrying full precision where it matters).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arctic/arctic_curve.hpp"
#include "arctic/asymptotics.hpp"
#include "arctic/enumerate.hpp"
#include "arctic/partition.hpp"
#include "arctic/paths.hpp"
#include "arctic/verify.hpp"

namespace py = pybind11;
using namespace arctic;

namespace {

mpfr_prec_t eff_prec(long bits, int n = 8) {
  if (bits >= MPScalar::kMinPrecision) return bits;
  return default_precision_bits(n);
}

ModelParams params_from(const std::string& model, double eta, double u, double v, double rho,
                        double rho_o, double rho_e, double nu, long precision) {
  auto m = model_from_name(model);
  if (!m) throw DomainError("unknown model: " + model);
  mpfr_prec_t prec = eff_prec(precision);
  ModelParams p = make_params(*m == Model::DT ? Model::TwentyV : *m, MPScalar(eta, prec),
                              MPScalar(u, prec), MPScalar(v, prec));
  p.model = *m;
  p.rho = MPScalar(rho, prec);
  p.rho_o = MPScalar(rho_o, prec);
  p.rho_e = MPScalar(rho_e, prec);
  p.nu = MPScalar(nu, prec);
  check_domain(p);
  return p;
}

py::dict counts_to_dict(const RefinedCountsZ& c) {
  py::dict d;
  d["total"] = py::int_(py::str(c.total.get_str()));
  py::list by_exit;
  for (const auto& z : c.by_exit) by_exit.append(py::int_(py::str(z.get_str())));
  d["by_exit"] = by_exit;
  if (!c.by_exit_horizontal.empty()) {
    py::list h, g;
    for (const auto& z : c.by_exit_horizontal) h.append(py::int_(py::str(z.get_str())));
    for (const auto& z : c.by_exit_diagonal) g.append(py::int_(py::str(z.get_str())));
    d["by_exit_horizontal"] = h;
    d["by_exit_diagonal"] = g;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_arcticlib, m) {
  m.doc() = "exact finite-size and tangent-method machinery for the 6V-DWBC, "
            "6V', 20V-DWBC3 and Aztec-triangle domino models";

  py::class_<ModelParams>(m, "Params")
      .def_property_readonly("model", [](const ModelParams& p) { return model_name(p.model); })
      .def_property_readonly("eta", [](const ModelParams& p) { return p.eta.to_double(); })
      .def_property_readonly("u", [](const ModelParams& p) { return p.u.to_double(); })
      .def_property_readonly("v", [](const ModelParams& p) { return p.v.to_double(); })
      .def_property_readonly("mu", &ModelParams::mu)
      .def("__repr__", [](const ModelParams& p) {
        return "<Params " + model_name(p.model) + " eta=" + std::to_string(p.eta.to_double()) +
               " u=" + std::to_string(p.u.to_double()) +
               " v=" + std::to_string(p.v.to_double()) + ">";
      });

  m.def("named_point",
        [](const std::string& name, py::object eta, long precision) {
          auto np = named_point_from_name(name);
          if (!np) throw DomainError("unknown named point: " + name);
          mpfr_prec_t prec = eff_prec(precision);
          if (eta.is_none()) return named_point(*np, prec);
          MPScalar e(eta.cast<double>(), prec);
          return named_point(*np, prec, &e);
        },
        py::arg("name"), py::arg("eta") = py::none(), py::arg("precision") = 0);

  m.def("params", &params_from, py::arg("model"), py::arg("eta"), py::arg("u"), py::arg("v"),
        py::arg("rho") = 1.0, py::arg("rho_o") = 1.0, py::arg("rho_e") = 1.0,
        py::arg("nu") = 1.0, py::arg("precision") = 0);

  m.def("partition",
        [](const ModelParams& p, int n, long precision) {
          return partition_fn(p, n, eff_prec(precision, n + 1)).to_double();
        },
        py::arg("params"), py::arg("n"), py::arg("precision") = 0);
  m.def("partition_str",
        [](const ModelParams& p, int n, int digits, long precision) {
          return partition_fn(p, n, eff_prec(precision, n + 1)).to_string(digits);
        },
        py::arg("params"), py::arg("n"), py::arg("digits") = 30, py::arg("precision") = 0);
  m.def("refined_partition",
        [](const ModelParams& p, int n, double xi, long precision) {
          mpfr_prec_t prec = eff_prec(precision, n + 1);
          return refined_partition(p, n, MPScalar(xi, prec), prec).to_double();
        },
        py::arg("params"), py::arg("n"), py::arg("xi"), py::arg("precision") = 0);
  m.def("one_point",
        [](const ModelParams& p, int n, double xi, long precision) {
          mpfr_prec_t prec = eff_prec(precision, n + 1);
          return one_point(p, n, MPScalar(xi, prec), prec).to_double();
        },
        py::arg("params"), py::arg("n"), py::arg("xi"), py::arg("precision") = 0);
  m.def("delta",
        [](const ModelParams& p, int n, long precision) {
          return delta(p, n, eff_prec(precision, n + 1)).to_double();
        },
        py::arg("params"), py::arg("n"), py::arg("precision") = 0);

  m.def("enumerate_counts",
        [](const std::string& model, int n) {
          auto mm = model_from_name(model);
          if (!mm) throw DomainError("unknown model: " + model);
          return counts_to_dict(enumerate_uniform_counts(*mm, n));
        },
        py::arg("model"), py::arg("n"));
  m.def("aztec_triangle", [](int n) { return counts_to_dict(count_aztec_triangle(n)); },
        py::arg("n"));
  m.def("product_formula_20v",
        [](int n) { return py::int_(py::str(z20v_product_formula(n).get_str())); },
        py::arg("n"));

  m.def("path_count",
        [](const ModelParams& p, int k, int l, long precision) {
          return path_partition_closed(p, k, l, eff_prec(precision)).to_double();
        },
        py::arg("params"), py::arg("k"), py::arg("l"), py::arg("precision") = 0);
  m.def("path_count_dp",
        [](const ModelParams& p, int k, int l, long precision) {
          return path_partition_dp(p, k, l, eff_prec(precision)).to_double();
        },
        py::arg("params"), py::arg("k"), py::arg("l"), py::arg("precision") = 0);

  m.def("free_energy",
        [](const ModelParams& p, long precision) {
          return free_energy(p, eff_prec(precision)).to_double();
        },
        py::arg("params"), py::arg("precision") = 0);
  m.def("one_point_exponent",
        [](const ModelParams& p, double xi, const std::string& kind, long precision) {
          mpfr_prec_t prec = eff_prec(precision);
          ExponentKind k = kind == "phi" ? ExponentKind::Phi : ExponentKind::Psi;
          return one_point_exponent(p, MPScalar(xi, prec), k, prec).to_double();
        },
        py::arg("params"), py::arg("xi"), py::arg("kind") = "psi", py::arg("precision") = 0);
  m.def("saddle",
        [](const ModelParams& p, double xi, long precision) {
          mpfr_prec_t prec = eff_prec(precision);
          SaddleData sd = saddle_data(p, MPScalar(xi, prec), prec);
          py::dict d;
          d["xi"] = sd.xi.to_double();
          d["t"] = sd.t.to_double();
          d["kappa"] = sd.kappa.to_double();
          d["lambda"] = sd.lambda.to_double();
          py::list ps;
          for (const auto& x : sd.p) ps.append(x.to_double());
          d["p"] = ps;
          return d;
        },
        py::arg("params"), py::arg("xi"), py::arg("precision") = 0);

  m.def("branch",
        [](const ModelParams& p, const std::string& id, int npoints, long precision) {
          BranchId b;
          if (id == "ne" || id == "NE") b = BranchId::NE;
          else if (id == "se" || id == "SE") b = BranchId::SE;
          else if (id == "full") b = BranchId::FullAnalytic;
          else throw DomainError("unknown branch: " + id);
          Branch br = branch_curve(p, b, npoints, eff_prec(precision));
          py::list out;
          for (size_t i = 0; i < br.points.size(); ++i) {
            py::dict d;
            d["xi"] = br.lines[i].xi.to_double();
            d["x"] = br.points[i].x.to_double();
            d["y"] = br.points[i].y.to_double();
            d["A"] = br.lines[i].A.to_double();
            d["B"] = br.lines[i].B.to_double();
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("params"), py::arg("branch") = "ne", py::arg("points") = 64,
        py::arg("precision") = 0);

  m.def("verify",
        [](const std::string& suite) {
          SuiteReport rep = run_verify_suite(suite);
          py::list checks;
          for (const CheckResult& c : rep.checks) {
            py::dict d;
            d["name"] = c.name;
            d["computed"] = c.computed;
            d["reference"] = c.reference;
            d["pass"] = c.pass;
            checks.append(std::move(d));
          }
          py::dict d;
          d["suite"] = rep.suite;
          d["ok"] = rep.ok();
          d["checks"] = checks;
          return d;
        },
        py::arg("suite"));
  m.def("verify_suites", [] { return verify_suite_names(); });

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SingularityError>(m, "SingularityError", PyExc_ArithmeticError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
}
