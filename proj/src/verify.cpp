#include "spinorlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "spinorlab/covariants.hpp"
#include "spinorlab/dualspace.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/sampling.hpp"
#include "spinorlab/symmetries.hpp"

namespace spinorlab {

namespace {

constexpr double kRealityTol = 1e-12;

double rel(double diff, double scale) { return diff / std::max(1.0, scale); }

CheckResult check(std::string name, double residual, double tol) {
  return CheckResult{std::move(name), residual, tol, residual <= tol};
}

// Expected Gram pattern in units of m.
CMat4 gram_pattern() {
  CMat4 p;
  p(0, 1) = 2.0;
  p(1, 0) = 2.0;
  p(2, 3) = -2.0;
  p(3, 2) = -2.0;
  return p;
}

struct PointRun {
  std::vector<CheckResult> checks;
  json details;
};

PointRun run_point(const Kinematics& k, const PhasePair& phases,
                   const VerifyOptions& opts, bool want_details) {
  const double tol = opts.tol;
  PointRun out;
  auto& checks = out.checks;

  const auto family = build_family(k, phases);
  const GammaOperator gamma = gamma_from_spin_sums(k, phases);
  const CMat4& G = gamma.matrix;
  const double gscale = G.max_abs();

  // Dirac-dual degeneracy: every family member is null under its own dual.
  double r_norm = 0.0;
  for (const auto& s : family) {
    const double sc = s.psi.max_abs();
    r_norm = std::max(r_norm, rel(std::abs(dirac_dual(s.psi) * s.psi), sc * sc));
  }
  checks.push_back(check("dirac_norm_degeneracy", r_norm, tol));

  const CMat4 gram = gram_dirac(k, phases);
  const CMat4 gram_over_m = cplx(1.0 / k.m) * gram;
  checks.push_back(
      check("gram_table", max_abs_diff(gram_over_m, gram_pattern()), tol));

  checks.push_back(check("gamma_involution",
                         rel(max_abs_diff(G * G, CMat4::identity()), gscale), tol));
  checks.push_back(
      check("gamma_self_inverse", rel(max_abs_diff(G, inverse(G)), gscale), tol));
  const CMat4& g5 = gamma_basis().gamma5;
  checks.push_back(check("gamma_chirality_commutes",
                         rel(max_abs_diff(G * g5, g5 * G), gscale), tol));

  double r_block = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      r_block = std::max(r_block, std::abs(G(i, j + 2)));
      r_block = std::max(r_block, std::abs(G(i + 2, j)));
    }
  checks.push_back(check("gamma_block_structure", rel(r_block, gscale), tol));

  // Gamma exchanges the helicity labels within each kind.
  double r_flip = 0.0;
  for (std::size_t a : {0, 2}) {
    const CVec4& pm = family[a].psi;
    const CVec4& mp = family[a + 1].psi;
    r_flip = std::max(r_flip, rel(max_abs_diff(G * pm, mp), mp.max_abs()));
    r_flip = std::max(r_flip, rel(max_abs_diff(G * mp, pm), pm.max_abs()));
  }
  checks.push_back(check("gamma_helicity_flip", r_flip, tol));

  const GammaOperator closed = gamma_closed_form(k, phases);
  const double r_closed = rel(max_abs_diff(G, closed.matrix), gscale);
  const bool phases_real =
      phases.beta_plus.imag() == 0.0 && phases.beta_minus.imag() == 0.0;
  // Asserted for real phases only; recorded unconditionally in the details.
  if (phases_real) checks.push_back(check("closed_form_match", r_closed, tol));

  checks.push_back(check("gamma_boost_covariance",
                         gamma_boost_covariance_check(k, phases), tol));

  // New-dual self pairings: +2 (kind S) and -2 (kind A) in units of m,
  // real, and unchanged between the rest frame and the boosted point.
  const auto rest_family = build_family(k.rest(), phases);
  const GammaOperator rest_gamma = gamma_from_spin_sums(k.rest(), phases);
  double r_pair = 0.0, r_imag = 0.0;
  json pairings = json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    const cplx eta =
        (flag_dipole_dual(family[i], gamma) * family[i].psi) / cplx(k.m);
    const cplx eta_rest = (flag_dipole_dual(rest_family[i], rest_gamma) *
                           rest_family[i].psi) / cplx(k.m);
    const double expected = family[i].label.kind == Kind::S ? 2.0 : -2.0;
    r_pair = std::max(r_pair, std::abs(eta - expected));
    r_pair = std::max(r_pair, std::abs(eta - eta_rest));
    r_imag = std::max(r_imag, std::abs(eta.imag()));
    pairings[to_string(family[i].label)] = cplx_to_json(eta);
  }
  checks.push_back(check("dual_self_pairings", r_pair, tol));
  checks.push_back(check("dual_pairing_reality", r_imag, kRealityTol));

  // Spin sums with the new dual: ±2m on the matching kind, zero across kinds.
  const CMat4 sum_s = spin_sum(Kind::S, k, phases, DualKind::flag_dipole);
  const CMat4 sum_a = spin_sum(Kind::A, k, phases, DualKind::flag_dipole);
  double r_action = 0.0;
  for (const auto& s : family) {
    const double sc = 2.0 * k.m * s.psi.max_abs();
    const cplx own = s.label.kind == Kind::S ? 2.0 * k.m : -2.0 * k.m;
    const CMat4& matching = s.label.kind == Kind::S ? sum_s : sum_a;
    const CMat4& other = s.label.kind == Kind::S ? sum_a : sum_s;
    r_action = std::max(r_action, rel(max_abs_diff(matching * s.psi, own * s.psi), sc));
    r_action = std::max(r_action, rel((other * s.psi).max_abs(), sc));
  }
  checks.push_back(check("spin_sum_action", r_action, tol));

  // Covariants: quadratic identities and the class of every member.
  const int expected_class = phases.unit_modulus_product() ? 5 : 4;
  double r_fpk = 0.0;
  bool class_ok = true;
  json spinor_details = json::object();
  for (const auto& s : family) {
    const BilinearSet b = bilinears(s.psi);
    const FpkResiduals f = fpk_residuals(b);
    const double sc = b.scale() * b.scale();
    r_fpk = std::max({r_fpk, rel(f.r1, sc), rel(f.r2, sc), rel(f.r3, sc)});
    const LounestoClass cls = lounesto_classify(b);
    class_ok = class_ok && cls.class_id == expected_class;
    if (want_details) {
      json sj;
      sj["psi"] = vec4_to_json(s.psi);
      sj["bilinears"] = bilinears_to_json(b);
      sj["fpk"] = json{{"r1", f.r1}, {"r2", f.r2}, {"r3", f.r3}};
      sj["lounesto_class"] = cls.class_id;
      spinor_details[to_string(s.label)] = sj;
    }
  }
  checks.push_back(check("fpk_residuals", r_fpk, tol));
  checks.push_back(check("lounesto_class", class_ok ? 0.0 : 1.0, 0.5));
  checks.push_back(
      check("flag_dipole_validity", phases.degenerate() ? 1.0 : 0.0, 0.5));

  const SymmetryLedger ledger = symmetry_ledger(k, phases, tol);
  const double r_sq =
      std::max({ledger.p_squared.residual, ledger.c_squared.residual,
                ledger.t_squared.residual, ledger.cpt_squared.residual});
  const double r_comm =
      std::max({ledger.cp_anticommutes.residual, ledger.ct_commutes.residual,
                ledger.tp_commutes.residual});
  checks.push_back(check("symmetry_squares", r_sq, tol));
  checks.push_back(check("symmetry_commutators", r_comm, tol));
  checks.push_back(
      check("lee_wick_evasion", ledger.lee_wick_evasion ? 0.0 : 1.0, 0.5));
  // Two-sided locus check: C/T/P images are proportional to family members
  // exactly on |b+ b-| = 1 and leave the family everywhere else.
  const bool expect_in_family = phases.unit_modulus_product();
  double r_family = 0.0;
  for (const auto& a : ledger.actions)
    if (a.fit.in_family != expect_in_family) r_family = 1.0;
  checks.push_back(check("symmetry_family_locus", r_family, 0.5));

  json controls = json::object();
  if (opts.with_controls) {
    // Corrupt the time component of J; the first identity must notice.
    BilinearSet broken = bilinears(family[0].psi);
    const double sc2 = std::max(1.0, broken.scale() * broken.scale());
    broken.J[0] += std::max(1.0, broken.scale());
    const double r1 = fpk_residuals(broken).r1;
    const bool fpk_detected = r1 > 1e-3 * sc2;
    checks.push_back(check("control_fpk_corruption", fpk_detected ? 0.0 : 1.0, 0.5));
    controls["fpk_corruption_residual"] = r1;

    // Transport the rest-frame operator built from scrambled phases; the
    // covariance residual must blow up.
    const PhasePair scrambled(1.7 * phases.beta_plus, phases.beta_minus / 1.6);
    const CMat4 wrong = boost_matrix(k) *
                        gamma_from_spin_sums(k.rest(), scrambled).matrix *
                        inverse(boost_matrix(k));
    const double r_scramble = rel(max_abs_diff(G, wrong), gscale);
    const bool scramble_detected = r_scramble > 1e-3;
    checks.push_back(
        check("control_covariance_scramble", scramble_detected ? 0.0 : 1.0, 0.5));
    controls["covariance_scramble_residual"] = r_scramble;
  }

  if (want_details) {
    json d;
    d["kinematics"] = kinematics_to_json(k);
    json ph = phases_to_json(phases);
    ph["degenerate"] = phases.degenerate();
    ph["unit_modulus_product"] = phases.unit_modulus_product();
    d["phases"] = ph;
    const BoostFactors bf = boost_factors(k);
    d["boost_factors"] = json{{"b_plus", bf.b_plus}, {"b_minus", bf.b_minus}};
    d["gram_over_m"] = mat4_to_json(gram_over_m);
    d["gamma_spin_sum"] = mat4_to_json(G);
    const ClosedFormFunctions cf = closed_form_functions(k, phases);
    d["closed_form"] = json{{"g", cplx_to_json(cf.g)},
                            {"f1", cplx_to_json(cf.f1)},
                            {"f2", cplx_to_json(cf.f2)},
                            {"g2_plus_f1f2", cplx_to_json(cf.g * cf.g + cf.f1 * cf.f2)},
                            {"residual_vs_spin_sum", r_closed},
                            {"asserted", phases_real}};
    d["dual_self_pairings_over_m"] = pairings;
    d["spinors"] = spinor_details;

    json lj;
    auto id_json = [](const IdentityCheck& c) {
      return json{{"residual", c.residual}, {"pass", c.pass}};
    };
    lj["P_squared_plus"] = id_json(ledger.p_squared);
    lj["C_squared_plus"] = id_json(ledger.c_squared);
    lj["T_squared_minus"] = id_json(ledger.t_squared);
    lj["CPT_squared_plus"] = id_json(ledger.cpt_squared);
    lj["CP_anticommutes"] = id_json(ledger.cp_anticommutes);
    lj["CT_commutes"] = id_json(ledger.ct_commutes);
    lj["TP_commutes"] = id_json(ledger.tp_commutes);
    lj["lee_wick_evasion"] = ledger.lee_wick_evasion;
    lj["cpt_square_is_plus_identity"] = ledger.cpt_square_is_plus_identity;
    json fam = json::object();
    for (const auto& a : ledger.actions) {
      fam[a.operator_name + " " + to_string(a.input)] =
          json{{"in_family", a.fit.in_family},
               {"best_fit_residual", a.fit.residual}};
    }
    lj["family_membership"] = fam;
    d["symmetry_ledger"] = lj;
    if (opts.with_controls) d["controls"] = controls;
    out.details = d;
  }

  return out;
}

}  // namespace

Report verify_report(const Kinematics& k, const PhasePair& phases,
                     const VerifyOptions& opts) {
  PointRun run = run_point(k, phases, opts, true);
  Report r;
  r.mode = "verify";
  r.tolerance = opts.tol;
  r.samples = 1;
  r.checks = std::move(run.checks);
  r.details = std::move(run.details);
  r.overall_pass = std::all_of(r.checks.begin(), r.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
  return r;
}

Report sweep_report(const SweepSpec& spec) {
  if (spec.count < 1) throw InvalidInput("sweep: sample count must be >= 1");
  SampleStream stream(spec.seed);

  Report r;
  r.mode = "sweep";
  r.seed = spec.seed;
  r.samples = spec.count;
  r.tolerance = spec.opts.tol;

  // Checks merge by name: the closed-form check only appears at real-phase
  // points, so positional merging would misalign.
  for (int i = 0; i < spec.count; ++i) {
    const Kinematics k = spec.fixed_kin ? *spec.fixed_kin : stream.kinematics();
    const PhasePair ph = spec.fixed_phases ? *spec.fixed_phases : stream.phases();
    PointRun run = run_point(k, ph, spec.opts, false);
    for (const auto& c : run.checks) {
      auto it = std::find_if(r.checks.begin(), r.checks.end(),
                             [&](const CheckResult& x) { return x.name == c.name; });
      if (it == r.checks.end()) {
        r.checks.push_back(c);
      } else {
        it->max_residual = std::max(it->max_residual, c.max_residual);
        it->pass = it->pass && c.pass;
      }
    }
  }
  r.details = json{{"sampler",
                    json{{"mass", "log-uniform [0.1, 10]"},
                         {"momentum_over_mass", "uniform [0, 10]"},
                         {"cos_theta", "uniform [-1, 1]"},
                         {"phi", "uniform [0, 2pi)"},
                         {"phase_moduli", "log-uniform [0.3, 3] excluding [0.85, 1/0.85]"},
                         {"phase_product_moduli", "excluding [0.85, 1/0.85]"}}}};
  r.overall_pass = std::all_of(r.checks.begin(), r.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
  return r;
}

json report_to_json(const Report& r) {
  json env;
  env["precision"] = r.precision;
  env["tolerance"] = r.tolerance;
  env["samples"] = r.samples;
  if (r.seed) env["seed"] = *r.seed;

  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"max_residual", c.max_residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});

  json j;
  j["schema_version"] = r.schema_version;
  j["mode"] = r.mode;
  j["environment"] = env;
  j["checks"] = checks;
  j["overall_pass"] = r.overall_pass;
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

std::string report_to_text(const Report& r) {
  std::string s;
  char line[160];

  std::snprintf(line, sizeof line, "spinorlab %s report (schema %d)\n",
                r.mode.c_str(), r.schema_version);
  s += line;
  if (r.seed)
    std::snprintf(line, sizeof line,
                  "precision %s   samples %d   seed %llu   tolerance %.3e\n\n",
                  r.precision.c_str(), r.samples,
                  static_cast<unsigned long long>(*r.seed), r.tolerance);
  else
    std::snprintf(line, sizeof line,
                  "precision %s   samples %d   tolerance %.3e\n\n",
                  r.precision.c_str(), r.samples, r.tolerance);
  s += line;

  std::snprintf(line, sizeof line, "  %-28s %14s %12s %s\n", "check",
                "max residual", "tolerance", "verdict");
  s += line;
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "  %-28s %14.3e %12.1e %s\n",
                  c.name.c_str(), c.max_residual, c.tolerance,
                  c.pass ? "pass" : "FAIL");
    s += line;
  }

  if (r.details.contains("gram_over_m")) {
    s += "\n  Dirac pairings over m (rows/cols S+-, S-+, A+-, A-+, real part)\n";
    const json& g = r.details["gram_over_m"];
    for (const auto& row : g) {
      s += "   ";
      for (const auto& entry : row) {
        std::snprintf(line, sizeof line, " %+8.4f", entry[0].get<double>());
        s += line;
      }
      s += "\n";
    }
  }
  if (r.details.contains("spinors")) {
    s += "\n  Lounesto classes: ";
    bool first = true;
    for (const auto& [name, sj] : r.details["spinors"].items()) {
      if (!first) s += ", ";
      std::snprintf(line, sizeof line, "%s -> %d", name.c_str(),
                    sj["lounesto_class"].get<int>());
      s += line;
      first = false;
    }
    s += "\n";
  }
  if (r.details.contains("symmetry_ledger")) {
    const json& l = r.details["symmetry_ledger"];
    s += "\n  discrete symmetry ledger\n";
    const std::pair<const char*, const char*> rows[] = {
        {"P_squared_plus", "P^2 = +1"},     {"C_squared_plus", "C^2 = +1"},
        {"T_squared_minus", "T^2 = -1"},    {"CPT_squared_plus", "(CPT)^2 = +1"},
        {"CP_anticommutes", "{C,P} = 0"},   {"CT_commutes", "[C,T] = 0"},
        {"TP_commutes", "[T,P] = 0"}};
    for (const auto& [key, text] : rows) {
      std::snprintf(line, sizeof line, "    %-14s residual %10.3e  %s\n", text,
                    l[key]["residual"].get<double>(),
                    l[key]["pass"].get<bool>() ? "pass" : "FAIL");
      s += line;
    }
    std::snprintf(line, sizeof line, "    Lee-Wick evasion (P^2 != T^2): %s\n",
                  l["lee_wick_evasion"].get<bool>() ? "yes" : "NO");
    s += line;
  }

  s += "\noverall ";
  s += r.overall_pass ? "PASS" : "FAIL";
  s += "\n";
  return s;
}

}  // namespace spinorlab
