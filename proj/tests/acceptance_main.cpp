// Acceptance harness. Each numbered criterion prints exactly one PASS/FAIL
// line with its pinned tolerance and worst observed residual; the process
// exits 0 only if every criterion holds. Sweeps are 1000 seeded points.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spinorlab/covariants.hpp"
#include "spinorlab/dualspace.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/sampling.hpp"
#include "spinorlab/spinors.hpp"
#include "spinorlab/symmetries.hpp"

using namespace spinorlab;

namespace {

constexpr int kSweep = 1000;

struct Outcome {
  bool pass;
  double worst;
  double tol;
  std::string note;
};

double rel(double diff, double scale) { return diff / std::max(1.0, scale); }

// ---- criterion 1: Dirac self-pairings vanish for all four labels ----------
Outcome dirac_degeneracy() {
  SampleStream stream(9001);
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    for (const auto& s : build_family(k, ph)) {
      const double sc = s.psi.max_abs();
      worst = std::max(worst, rel(std::abs(dirac_dual(s.psi) * s.psi), sc * sc));
    }
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 2: Gram table is the 2m / -2m antidiagonal pattern ---------
Outcome gram_pattern() {
  SampleStream stream(9002);
  CMat4 pattern;
  pattern(0, 1) = pattern(1, 0) = 2.0;
  pattern(2, 3) = pattern(3, 2) = -2.0;
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 table = cplx(1.0 / k.m) * gram_dirac(k, ph);
    worst = std::max(worst, max_abs_diff(table, pattern));
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 3: operator involution, inverse, chirality, label flip -----
Outcome gamma_properties() {
  SampleStream stream(9003);
  const CMat4& g5 = gamma_basis().gamma5;
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const CMat4 G = gamma_from_spin_sums(k, ph).matrix;
    const double sc = std::max(1.0, G.max_abs());

    worst = std::max(worst, max_abs_diff(G * G, CMat4::identity()) / sc);
    worst = std::max(worst, max_abs_diff(G, inverse(G)) / sc);
    worst = std::max(worst, max_abs_diff(G * g5, g5 * G) / sc);

    const auto fam = build_family(k, ph);
    for (std::size_t a : {std::size_t{0}, std::size_t{2}}) {
      const double fs = std::max(fam[a].psi.max_abs(), fam[a + 1].psi.max_abs());
      worst = std::max(worst, rel(max_abs_diff(G * fam[a].psi, fam[a + 1].psi), fs));
      worst = std::max(worst, rel(max_abs_diff(G * fam[a + 1].psi, fam[a].psi), fs));
    }
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 4: closed-form entries; g^2 + f1 f2 = 1; form vs spin sum --
Outcome closed_form() {
  const Kinematics ref(1.0, 0.75, M_PI / 2, 0.0);
  const ClosedFormFunctions f = closed_form_functions(ref, PhasePair(2.0, 0.5));
  const double frozen = std::max({std::abs(f.g - 4.0625),
                                  std::abs(f.f1 - 3.9375),
                                  std::abs(f.f2 - (-3.9375))});
  if (frozen > 1e-12)
    return {false, frozen, 1e-12, "frozen-point entries off"};

  SampleStream stream(9004);
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair drawn = stream.phases();
    const PhasePair real_ph(std::abs(drawn.beta_plus), std::abs(drawn.beta_minus));

    const ClosedFormFunctions cf = closed_form_functions(k, real_ph);
    worst = std::max(worst, std::abs(cf.g * cf.g + cf.f1 * cf.f2 - 1.0));

    const CMat4 a = gamma_from_spin_sums(k, real_ph).matrix;
    const CMat4 b = gamma_closed_form(k, real_ph).matrix;
    worst = std::max(worst, rel(max_abs_diff(a, b), a.max_abs()));
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 5: boost covariance plus the scrambled negative control ----
Outcome boost_covariance() {
  SampleStream stream(9005);
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    worst = std::max(worst, gamma_boost_covariance_check(k, ph));
  }
  if (worst > 1e-10) return {false, worst, 1e-10, ""};

  // Scrambled transport must be clearly detected.
  const Kinematics k(1.0, 0.75, M_PI / 2, 0.0);
  const PhasePair ph(2.0, 0.5);
  const PhasePair scrambled(cplx(1.7) * ph.beta_plus, ph.beta_minus / cplx(1.6));
  const CMat4 right = gamma_from_spin_sums(k, ph).matrix;
  const CMat4 wrong = boost_matrix(k) *
                      gamma_from_spin_sums(k.rest(), scrambled).matrix *
                      inverse(boost_matrix(k));
  const double control = rel(max_abs_diff(right, wrong), right.max_abs());
  if (control <= 1e-3)
    return {false, control, 1e-3, "negative control not detected"};
  return {true, worst, 1e-10, ""};
}

// ---- criterion 6: new-dual norms +-2m, real, frame-independent ------------
Outcome new_dual_norms() {
  SampleStream stream(9006);
  double worst = 0.0, worst_imag = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const auto fam = build_family(k, ph);
    const GammaOperator G = gamma_from_spin_sums(k, ph);
    const auto rest_fam = build_family(k.rest(), ph);
    const GammaOperator rest_G = gamma_from_spin_sums(k.rest(), ph);

    for (std::size_t a = 0; a < 4; ++a) {
      const cplx eta = (flag_dipole_dual(fam[a], G) * fam[a].psi) / cplx(k.m);
      const cplx eta0 =
          (flag_dipole_dual(rest_fam[a], rest_G) * rest_fam[a].psi) / cplx(k.m);
      const double expect = fam[a].label.kind == Kind::S ? 2.0 : -2.0;
      worst = std::max(worst, std::abs(eta - expect));
      worst = std::max(worst, std::abs(eta - eta0));
      worst_imag = std::max(worst_imag, std::abs(eta.imag()));
    }
  }
  if (worst_imag > 1e-12)
    return {false, worst_imag, 1e-12, "imaginary part of a norm"};
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 7: class 4 off the loci, class 5 on the unit boundary ------
Outcome classification() {
  SampleStream stream(9007);
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    for (const auto& s : build_family(k, ph)) {
      const BilinearSet b = bilinears(s.psi);
      const double sc2 = std::max(1.0, b.scale() * b.scale());
      if (lounesto_classify(b).class_id != 4)
        return {false, 1.0, 1e-10, "expected class 4 at " + to_string(s.label)};
      const FpkResiduals f = fpk_residuals(b);
      worst = std::max({worst, f.r1 / sc2, f.r2 / sc2, f.r3 / sc2});
      worst = std::max(worst, std::abs(minkowski_dot(b.J, b.J)) / sc2);
      worst = std::max(worst, std::abs(minkowski_dot(b.K, b.K)) / sc2);
    }

    const PhasePair edge = stream.boundary_phases();
    for (const auto& s : build_family(k, edge)) {
      const BilinearSet b = bilinears(s.psi);
      const double sc2 = std::max(1.0, b.scale() * b.scale());
      if (lounesto_classify(b).class_id != 5)
        return {false, 1.0, 1e-10, "expected class 5 on the boundary"};
      worst = std::max(worst, std::abs(minkowski_dot(b.J, b.J)) / sc2);
      worst = std::max(worst, std::abs(minkowski_dot(b.K, b.K)) / sc2);
    }
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 8: discrete-symmetry ledger at every sample ----------------
Outcome symmetry_ledger_everywhere() {
  SampleStream stream(9008);
  double worst = 0.0;
  for (int i = 0; i < kSweep; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const SymmetryLedger ledger = symmetry_ledger(k, ph);

    worst = std::max({worst, ledger.p_squared.residual, ledger.c_squared.residual,
                      ledger.t_squared.residual, ledger.cpt_squared.residual,
                      ledger.cp_anticommutes.residual, ledger.ct_commutes.residual,
                      ledger.tp_commutes.residual});
    if (!ledger.lee_wick_evasion)
      return {false, 1.0, 1e-10, "Lee-Wick evasion flag dropped"};
    if (!ledger.cpt_square_is_plus_identity)
      return {false, 1.0, 1e-10, "(CPT)^2 flag dropped"};
    for (const auto& action : ledger.actions)
      if (action.fit.in_family)
        return {false, action.fit.residual, 1e-10,
                action.operator_name + " image stayed in the family"};
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 9: displayed C/T/P/CP/PC actions, hand-assembled oracle ----
//
// The oracle below is built from scratch: half-angle two-spinors, the
// literal Theta matrix, and scalar boost factors. It never calls the
// operator implementations under test.
struct Oracle {
  CVec4 C, T, P, CP, PC;
};

Oracle displayed_actions(const Kinematics& k, const PhasePair& ph) {
  const double c = std::cos(0.5 * k.theta), s = std::sin(0.5 * k.theta);
  const cplx em = std::polar(1.0, -0.5 * k.phi), ep = std::polar(1.0, 0.5 * k.phi);
  const double rm = std::sqrt(k.m);
  const CVec2 plus{{rm * c * em, rm * s * ep}};
  const CVec2 minus{{-rm * s * em, rm * c * ep}};

  auto theta_conj = [](const CVec2& v) {  // Theta v* for Theta = [[0,-1],[1,0]]
    return CVec2{{-std::conj(v[1]), std::conj(v[0])}};
  };

  const double bplus = std::sqrt((k.E + k.p) / k.m);
  const double bminus = std::sqrt((k.E - k.p) / k.m);
  const cplx i{0.0, 1.0};
  const cplx bp_conj = std::conj(ph.beta_plus);
  const cplx bm_inv = 1.0 / ph.beta_minus;
  const cplx bm_conj_inv = 1.0 / std::conj(ph.beta_minus);

  Oracle o;
  o.C = cplx(bplus) * join(i * bp_conj * theta_conj(minus),
                           (-i * bm_inv) * minus);
  o.T = cplx(-bplus) * join(bp_conj * theta_conj(minus), bm_inv * minus);
  o.P = cplx(bminus) * join(ph.beta_plus * theta_conj(plus),
                            bm_conj_inv * plus);
  o.CP = cplx(bminus) * join((i * bm_inv) * theta_conj(plus),
                             i * bp_conj * plus);
  o.PC = -o.CP;
  return o;
}

Outcome displayed_regressions() {
  SampleStream stream(9009);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Kinematics k = stream.kinematics();
    const PhasePair ph = stream.phases();
    const auto s = build_spinor({Kind::S, Helicity::PlusMinus}, k, ph);
    const Oracle o = displayed_actions(k, ph);
    const CMat4 P = parity_matrix(k);

    const double sc = std::max(1.0, s.psi.max_abs());
    worst = std::max(worst, max_abs_diff(charge_conjugate(s.psi), o.C) / sc);
    worst = std::max(worst, max_abs_diff(time_reverse(s.psi), o.T) / sc);
    worst = std::max(worst, max_abs_diff(P * s.psi, o.P) / sc);
    worst = std::max(worst,
                     max_abs_diff(charge_conjugate(P * s.psi), o.CP) / sc);
    worst = std::max(worst,
                     max_abs_diff(P * charge_conjugate(s.psi), o.PC) / sc);
  }
  return {worst <= 1e-10, worst, 1e-10, ""};
}

// ---- criterion 10: CLI sweeps with one seed are byte-identical -------------
Outcome determinism(const std::string& cli) {
  if (cli.empty())
    return {false, 1.0, 0.0, "no --cli path supplied"};

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "spinorlab_acceptance_a.json";
  const fs::path b = dir / "spinorlab_acceptance_b.json";

  auto run = [&](const fs::path& out) {
    const std::string cmd = "\"" + cli + "\" sweep --n 1000 --seed 42 --out \"" +
                            out.string() + "\"";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  const int ra = run(a);
  const int rb = run(b);
  if (ra != 0 || rb != 0)
    return {false, 1.0, 0.0,
            "cli exited " + std::to_string(ra) + " / " + std::to_string(rb)};

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string ca = slurp(a), cb = slurp(b);
  fs::remove(a);
  fs::remove(b);
  if (ca.empty()) return {false, 1.0, 0.0, "empty report"};
  if (ca != cb) return {false, 1.0, 0.0, "reports differ between runs"};
  return {true, 0.0, 0.0, ""};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  struct Row {
    const char* title;
    Outcome out;
  };
  const std::vector<Row> rows = {
      {"Dirac-dual self-pairings vanish for all labels", dirac_degeneracy()},
      {"Gram table matches the 2m antidiagonal pattern", gram_pattern()},
      {"operator: involution, inverse, chirality, flip", gamma_properties()},
      {"closed-form entries, unit constraint, spin-sum match", closed_form()},
      {"boost covariance with scrambled-phase control", boost_covariance()},
      {"new-dual norms +-2m, real, frame-independent", new_dual_norms()},
      {"class 4 off the loci, class 5 on the boundary", classification()},
      {"discrete-symmetry ledger at every sample", symmetry_ledger_everywhere()},
      {"displayed C/T/P/CP/PC actions vs oracle assembly", displayed_regressions()},
      {"seeded CLI sweeps are byte-identical", determinism(cli)},
  };

  bool all = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Outcome& o = rows[i].out;
    all = all && o.pass;
    std::printf("[%2zu] %s  %-52s (worst %.3e, tol %.1e)%s%s\n", i + 1,
                o.pass ? "PASS" : "FAIL", rows[i].title, o.worst, o.tol,
                o.note.empty() ? "" : "  -- ", o.note.c_str());
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
