#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spinorlab/covariants.hpp"
#include "spinorlab/dualspace.hpp"
#include "spinorlab/errors.hpp"
#include "spinorlab/json_io.hpp"
#include "spinorlab/verify.hpp"

namespace {

using namespace spinorlab;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;

// "re,im" or a bare real part.
cplx parse_cplx_flag(const std::string& text) {
  try {
    std::size_t used = 0;
    const double re = std::stod(text, &used);
    if (used == text.size()) return cplx(re, 0.0);
    if (text[used] != ',') throw InvalidInput("");
    std::size_t used2 = 0;
    const std::string rest = text.substr(used + 1);
    const double im = std::stod(rest, &used2);
    if (used2 != rest.size()) throw InvalidInput("");
    return cplx(re, im);
  } catch (...) {
    throw InvalidInput("expected a complex flag value as re or re,im: '" + text +
                       "'");
  }
}

struct CommonFlags {
  std::string config_path;
  std::optional<double> m, p, theta, phi;
  std::string beta_plus, beta_minus;
  std::optional<double> tol;
  std::string format;
  std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool with_point) {
  cmd->add_option("--config", f.config_path, "JSON run configuration file");
  if (with_point) {
    cmd->add_option("--m", f.m, "mass");
    cmd->add_option("--p", f.p, "momentum magnitude");
    cmd->add_option("--theta", f.theta, "polar angle of the momentum direction");
    cmd->add_option("--phi", f.phi, "azimuthal angle of the momentum direction");
    cmd->add_option("--beta-plus", f.beta_plus, "phase b+ as re or re,im");
    cmd->add_option("--beta-minus", f.beta_minus, "phase b- as re or re,im");
  }
  cmd->add_option("--tol", f.tol, "identity tolerance (default 1e-10)");
  cmd->add_option("--format", f.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", f.out, "write the report to this path");
}

struct ResolvedRun {
  std::optional<Kinematics> kin;
  std::optional<PhasePair> phases;
  std::optional<int> count;
  std::optional<std::uint64_t> seed;
  double tol;
  std::string format;
  std::optional<std::string> out;
};

// Flags override config values; the tolerance falls back to the
// SPINOR_LAB_TOL environment variable before the built-in default.
// default_tol is 1e-10 for identity checks and 1e-8 for classification.
ResolvedRun resolve(const CommonFlags& f, double default_tol) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = load_run_config(f.config_path);

  ResolvedRun r;
  const bool any_kin_flag = f.m || f.p || f.theta || f.phi;
  if (any_kin_flag) {
    if (!(f.m && f.p && f.theta && f.phi) && !cfg.kin)
      throw InvalidInput("kinematics: need all of --m --p --theta --phi");
    const Kinematics base = cfg.kin ? *cfg.kin : Kinematics(1, 0, 0, 0);
    r.kin = Kinematics(f.m.value_or(base.m), f.p.value_or(base.p),
                       f.theta.value_or(base.theta), f.phi.value_or(base.phi));
  } else {
    r.kin = cfg.kin;
  }

  const bool any_phase_flag = !f.beta_plus.empty() || !f.beta_minus.empty();
  if (any_phase_flag) {
    if ((f.beta_plus.empty() || f.beta_minus.empty()) && !cfg.phases)
      throw InvalidInput("phases: need both --beta-plus and --beta-minus");
    const PhasePair base = cfg.phases ? *cfg.phases : PhasePair(1.0, 1.0);
    r.phases = PhasePair(
        f.beta_plus.empty() ? base.beta_plus : parse_cplx_flag(f.beta_plus),
        f.beta_minus.empty() ? base.beta_minus : parse_cplx_flag(f.beta_minus));
  } else {
    r.phases = cfg.phases;
  }

  r.count = cfg.count;
  r.seed = cfg.seed;

  if (f.tol) {
    r.tol = *f.tol;
  } else if (cfg.tol) {
    r.tol = *cfg.tol;
  } else if (const char* env = std::getenv("SPINOR_LAB_TOL")) {
    char* end = nullptr;
    r.tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(r.tol > 0))
      throw InvalidInput("SPINOR_LAB_TOL: not a positive number");
  } else {
    r.tol = default_tol;
  }

  if (!f.format.empty())
    r.format = f.format;
  else if (cfg.format)
    r.format = *cfg.format;
  else
    r.format = "json";
  if (!f.out.empty())
    r.out = f.out;
  else if (cfg.out)
    r.out = cfg.out;
  return r;
}

void emit(const json& j, const std::string& text, const ResolvedRun& r) {
  std::string payload = r.format == "text" ? text : j.dump(2) + "\n";
  if (r.out) {
    std::ofstream os(*r.out, std::ios::binary);
    if (!os) throw InvalidInput("cannot open output path '" + *r.out + "'");
    os << payload;
  } else {
    std::cout << payload;
  }
}

int cmd_verify(const CommonFlags& flags, bool with_controls) {
  const ResolvedRun r = resolve(flags, 1e-10);
  if (!r.kin || !r.phases)
    throw InvalidInput("verify: a full point is required (kinematics and phases)");
  VerifyOptions opts;
  opts.tol = r.tol;
  opts.with_controls = with_controls;
  const Report rep = verify_report(*r.kin, *r.phases, opts);
  emit(report_to_json(rep), report_to_text(rep), r);
  return rep.overall_pass ? kExitPass : kExitViolation;
}

int cmd_sweep(const CommonFlags& flags, std::optional<int> n,
              std::optional<std::uint64_t> seed) {
  const ResolvedRun r = resolve(flags, 1e-10);
  SweepSpec spec;
  spec.count = n ? *n : r.count.value_or(1000);
  if (spec.count < 1) throw InvalidInput("sweep: --n must be >= 1");
  spec.seed = seed ? *seed : r.seed.value_or(42);
  spec.opts.tol = r.tol;
  spec.fixed_kin = r.kin;
  spec.fixed_phases = r.phases;
  const Report rep = sweep_report(spec);
  emit(report_to_json(rep), report_to_text(rep), r);
  return rep.overall_pass ? kExitPass : kExitViolation;
}

int cmd_classify(const CommonFlags& flags, const std::string& path) {
  const ResolvedRun r = resolve(flags, 1e-8);

  json input;
  try {
    if (path == "-") {
      std::cin >> input;
    } else {
      std::ifstream in(path);
      if (!in) throw InvalidInput("classify: cannot open '" + path + "'");
      in >> input;
    }
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("classify: ") + e.what());
  }

  const auto literal = spinor_literal_from_json(input);
  CVec4 psi;
  json echo;
  if (std::holds_alternative<FlagDipoleSpinor>(literal)) {
    const auto& s = std::get<FlagDipoleSpinor>(literal);
    psi = s.psi;
    echo = spinor_literal_to_json(s);
  } else {
    psi = std::get<CVec4>(literal);
    echo = json{{"vector", vec4_to_json(psi)}};
  }

  const BilinearSet b = bilinears(psi);
  const FpkResiduals f = fpk_residuals(b);
  const LounestoClass cls = lounesto_classify(b, r.tol);

  json j;
  j["schema_version"] = 1;
  j["input"] = echo;
  j["bilinears"] = bilinears_to_json(b);
  j["fpk"] = json{{"r1", f.r1}, {"r2", f.r2}, {"r3", f.r3}};
  j["lounesto_class"] = cls.class_id;
  j["tolerance"] = cls.tol;

  char line[128];
  std::string text;
  std::snprintf(line, sizeof line,
                "lounesto class %d   sigma %.6g   |omega| %.6g\n", cls.class_id,
                b.sigma.real(), std::abs(b.omega));
  text += line;
  std::snprintf(line, sizeof line, "fpk residuals  r1 %.3e  r2 %.3e  r3 %.3e\n",
                f.r1, f.r2, f.r3);
  text += line;

  emit(j, text, r);
  return kExitPass;
}

int cmd_gamma(const CommonFlags& flags, bool closed_form) {
  const ResolvedRun r = resolve(flags, 1e-10);
  if (!r.kin || !r.phases)
    throw InvalidInput("gamma: a full point is required (kinematics and phases)");

  const GammaOperator op = closed_form ? gamma_closed_form(*r.kin, *r.phases)
                                       : gamma_from_spin_sums(*r.kin, *r.phases);
  json j;
  j["schema_version"] = 1;
  j["source"] = closed_form ? "closed_form" : "spin_sum";
  j["kin"] = kinematics_to_json(*r.kin);
  j["phases"] = phases_to_json(*r.phases);
  j["gamma"] = mat4_to_json(op.matrix);
  if (closed_form) {
    const ClosedFormFunctions f = closed_form_functions(*r.kin, *r.phases);
    j["g"] = cplx_to_json(f.g);
    j["f1"] = cplx_to_json(f.f1);
    j["f2"] = cplx_to_json(f.f2);
    j["g2_plus_f1f2"] = cplx_to_json(f.g * f.g + f.f1 * f.f2);
  }

  std::string text = "gamma (" + std::string(closed_form ? "closed form" : "spin sum") + ")\n";
  char line[160];
  for (std::size_t i = 0; i < 4; ++i) {
    text += " ";
    for (std::size_t c = 0; c < 4; ++c) {
      const cplx z = op.matrix(i, c);
      std::snprintf(line, sizeof line, "  (%+9.4f,%+9.4f)", z.real(), z.imag());
      text += line;
    }
    text += "\n";
  }

  emit(j, text, r);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag-dipole spinors: construction, duals, covariants, symmetries"};
  app.require_subcommand(1);

  CommonFlags verify_flags, sweep_flags, classify_flags, gamma_flags;
  bool with_controls = false;
  std::optional<int> sweep_n;
  std::optional<std::uint64_t> sweep_seed;
  std::string classify_path;
  bool gamma_closed = false, gamma_spin = false;

  CLI::App* verify =
      app.add_subcommand("verify", "run the identity suite at one point");
  add_common_flags(verify, verify_flags, true);
  verify->add_flag("--with-controls", with_controls,
                   "include negative controls (corruption must be detected)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "aggregate the identity suite over samples");
  add_common_flags(sweep, sweep_flags, true);
  sweep->add_option("--n", sweep_n, "number of samples (default 1000)");
  sweep->add_option("--seed", sweep_seed, "sampler seed (default 42)");

  CLI::App* classify =
      app.add_subcommand("classify", "report bilinears and Lounesto class");
  add_common_flags(classify, classify_flags, false);
  classify
      ->add_option("spinor", classify_path,
                   "spinor literal JSON file, or - for stdin")
      ->required();

  CLI::App* gamma =
      app.add_subcommand("gamma", "print the dual-structure operator");
  add_common_flags(gamma, gamma_flags, true);
  gamma->add_flag("--closed-form", gamma_closed, "use the closed-form entries");
  gamma->add_flag("--spin-sum", gamma_spin, "use the spin-sum definition (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(verify_flags, with_controls);
    if (app.got_subcommand(sweep)) return cmd_sweep(sweep_flags, sweep_n, sweep_seed);
    if (app.got_subcommand(classify))
      return cmd_classify(classify_flags, classify_path);
    if (app.got_subcommand(gamma)) {
      if (gamma_closed && gamma_spin)
        throw InvalidInput("gamma: pick one of --closed-form or --spin-sum");
      return cmd_gamma(gamma_flags, gamma_closed);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
