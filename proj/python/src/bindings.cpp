// Python face of the library: thin conversions, no logic. Vectors travel as
// 4-tuples of complex, matrices as nested 4x4 tuples, reports as JSON text.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>

#include "spinorlab/covariants.hpp"
#include "spinorlab/dualspace.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/symmetries.hpp"
#include "spinorlab/verify.hpp"

namespace py = pybind11;
using namespace spinorlab;

namespace {

using PyVec = std::array<cplx, 4>;
using PyMat = std::array<std::array<cplx, 4>, 4>;

PyVec to_py(const CVec4& v) { return {v[0], v[1], v[2], v[3]}; }

CVec4 from_py(const PyVec& a) {
  CVec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = a[i];
  return v;
}

PyMat to_py(const CMat4& m) {
  PyMat r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = m(i, j);
  return r;
}

SpinorLabel parse_label(const std::string& s) {
  for (const auto& label : all_labels())
    if (to_string(label) == s) return label;
  throw InvalidInput("label must be one of S+-, S-+, A+-, A-+ (got '" + s + "')");
}

py::dict bilinears_dict(const BilinearSet& b) {
  py::dict d;
  d["sigma"] = b.sigma;
  d["omega"] = b.omega;
  d["J"] = b.J;
  d["K"] = b.K;
  d["S"] = b.S;
  d["S_index_order"] = "01,02,03,12,13,23";
  return d;
}

py::dict ledger_dict(const SymmetryLedger& l) {
  auto entry = [](const IdentityCheck& c) {
    py::dict d;
    d["residual"] = c.residual;
    d["pass"] = c.pass;
    return d;
  };
  py::dict d;
  d["P_squared_plus"] = entry(l.p_squared);
  d["C_squared_plus"] = entry(l.c_squared);
  d["T_squared_minus"] = entry(l.t_squared);
  d["CPT_squared_plus"] = entry(l.cpt_squared);
  d["CP_anticommutes"] = entry(l.cp_anticommutes);
  d["CT_commutes"] = entry(l.ct_commutes);
  d["TP_commutes"] = entry(l.tp_commutes);
  d["lee_wick_evasion"] = l.lee_wick_evasion;
  d["cpt_square_is_plus_identity"] = l.cpt_square_is_plus_identity;
  d["all_pass"] = l.all_pass();
  py::dict fits;
  for (const auto& a : l.actions) {
    py::dict f;
    f["in_family"] = a.fit.in_family;
    f["residual"] = a.fit.residual;
    f["output"] = to_py(a.output);
    fits[py::str(a.operator_name + " " + to_string(a.input))] = f;
  }
  d["actions"] = fits;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "flag-dipole spinors: construction, duals, covariants, symmetries";

  py::register_exception<Error>(m, "SpinorLabError");

  py::class_<Kinematics>(m, "Kinematics")
      .def(py::init<double, double, double, double>(), py::arg("m"),
           py::arg("p"), py::arg("theta"), py::arg("phi"))
      .def_readonly("m", &Kinematics::m)
      .def_readonly("p", &Kinematics::p)
      .def_readonly("theta", &Kinematics::theta)
      .def_readonly("phi", &Kinematics::phi)
      .def_readonly("E", &Kinematics::E)
      .def("rest", &Kinematics::rest)
      .def("__repr__", [](const Kinematics& k) {
        return "Kinematics(m=" + std::to_string(k.m) + ", p=" + std::to_string(k.p) +
               ", theta=" + std::to_string(k.theta) +
               ", phi=" + std::to_string(k.phi) + ")";
      });

  py::class_<PhasePair>(m, "PhasePair")
      .def(py::init<cplx, cplx>(), py::arg("beta_plus"), py::arg("beta_minus"))
      .def_readonly("beta_plus", &PhasePair::beta_plus)
      .def_readonly("beta_minus", &PhasePair::beta_minus)
      .def("degenerate", &PhasePair::degenerate, py::arg("tol") = 1e-9)
      .def("unit_modulus_product", &PhasePair::unit_modulus_product,
           py::arg("tol") = 1e-9);

  m.def("labels", [] {
    std::array<std::string, 4> names;
    const auto ls = all_labels();
    for (std::size_t i = 0; i < 4; ++i) names[i] = to_string(ls[i]);
    return names;
  });

  m.def(
      "boost_factors",
      [](const Kinematics& k) {
        const BoostFactors b = boost_factors(k);
        return py::make_tuple(b.b_plus, b.b_minus);
      },
      py::arg("kin"));

  m.def(
      "build_spinor",
      [](const std::string& label, const Kinematics& k, const PhasePair& ph) {
        return to_py(build_spinor(parse_label(label), k, ph).psi);
      },
      py::arg("label"), py::arg("kin"), py::arg("phases"));

  m.def(
      "build_family",
      [](const Kinematics& k, const PhasePair& ph) {
        py::dict d;
        for (const auto& s : build_family(k, ph))
          d[py::str(to_string(s.label))] = to_py(s.psi);
        return d;
      },
      py::arg("kin"), py::arg("phases"));

  m.def(
      "gram_dirac",
      [](const Kinematics& k, const PhasePair& ph) {
        return to_py(gram_dirac(k, ph));
      },
      py::arg("kin"), py::arg("phases"));

  m.def(
      "gamma_spin_sum",
      [](const Kinematics& k, const PhasePair& ph) {
        return to_py(gamma_from_spin_sums(k, ph).matrix);
      },
      py::arg("kin"), py::arg("phases"));

  m.def(
      "gamma_closed_form",
      [](const Kinematics& k, const PhasePair& ph) {
        return to_py(spinorlab::gamma_closed_form(k, ph).matrix);
      },
      py::arg("kin"), py::arg("phases"));

  m.def(
      "closed_form_functions",
      [](const Kinematics& k, const PhasePair& ph) {
        const ClosedFormFunctions f = closed_form_functions(k, ph);
        return py::make_tuple(f.g, f.f1, f.f2);
      },
      py::arg("kin"), py::arg("phases"));

  m.def(
      "gamma_boost_covariance_check",
      [](const Kinematics& k, const PhasePair& ph) {
        return gamma_boost_covariance_check(k, ph);
      },
      py::arg("kin"), py::arg("phases"));

  m.def(
      "bilinears",
      [](const PyVec& psi) { return bilinears_dict(bilinears(from_py(psi))); },
      py::arg("psi"));

  m.def(
      "fpk_residuals",
      [](const PyVec& psi) {
        const FpkResiduals r = fpk_residuals(bilinears(from_py(psi)));
        return py::make_tuple(r.r1, r.r2, r.r3);
      },
      py::arg("psi"));

  m.def(
      "lounesto_class",
      [](const PyVec& psi, double tol) {
        return lounesto_classify(bilinears(from_py(psi)), tol).class_id;
      },
      py::arg("psi"), py::arg("tol") = 1e-8);

  m.def(
      "charge_conjugate",
      [](const PyVec& psi) { return to_py(charge_conjugate(from_py(psi))); },
      py::arg("psi"));

  m.def(
      "time_reverse",
      [](const PyVec& psi) { return to_py(time_reverse(from_py(psi))); },
      py::arg("psi"));

  m.def(
      "parity",
      [](const Kinematics& k, const PyVec& psi) {
        return to_py(parity_matrix(k) * from_py(psi));
      },
      py::arg("kin"), py::arg("psi"));

  m.def(
      "symmetry_ledger",
      [](const Kinematics& k, const PhasePair& ph, double tol) {
        return ledger_dict(symmetry_ledger(k, ph, tol));
      },
      py::arg("kin"), py::arg("phases"), py::arg("tol") = 1e-10);

  m.def(
      "verify_json",
      [](const Kinematics& k, const PhasePair& ph, double tol,
         bool with_controls) {
        VerifyOptions opts;
        opts.tol = tol;
        opts.with_controls = with_controls;
        return report_to_json(verify_report(k, ph, opts)).dump(2);
      },
      py::arg("kin"), py::arg("phases"), py::arg("tol") = 1e-10,
      py::arg("with_controls") = false);

  m.def(
      "sweep_json",
      [](int n, std::uint64_t seed, double tol) {
        SweepSpec spec;
        spec.count = n;
        spec.seed = seed;
        spec.opts.tol = tol;
        return report_to_json(sweep_report(spec)).dump(2);
      },
      py::arg("n") = 1000, py::arg("seed") = 42, py::arg("tol") = 1e-10);
}
