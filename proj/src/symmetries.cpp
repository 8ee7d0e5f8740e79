#include "spinorlab/symmetries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spinorlab {

CMat4 parity_matrix(const Kinematics& k) {
  const GammaBasis& g = gamma_basis();
  const auto n = k.direction();
  const CMat4 pvec = cplx(n[0]) * g.gamma1 + cplx(n[1]) * g.gamma2 +
                     cplx(n[2]) * g.gamma3;
  return cplx(1.0 / k.m) * (cplx(k.E) * g.gamma0 + cplx(k.p) * pvec);
}

CVec4 parity_apply(const FlagDipoleSpinor& psi) {
  return parity_matrix(psi.kin) * psi.psi;
}

CVec4 charge_conjugate(const CVec4& psi) {
  return gamma_basis().gamma2 * psi.conjugate();
}

CVec4 time_reverse(const CVec4& psi) {
  const GammaBasis& g = gamma_basis();
  return cplx{0.0, 1.0} * (g.gamma5 * (g.gamma2 * psi.conjugate()));
}

FamilyFit family_fit(const CVec4& v, const std::array<FlagDipoleSpinor, 4>& family,
                     double tol) {
  FamilyFit best{false, family[0].label, 0.0, std::numeric_limits<double>::max()};
  const double vscale = std::max(1.0, v.max_abs());
  for (const auto& member : family) {
    const cplx coeff = dot(member.psi, v) / dot(member.psi, member.psi);
    const double res = max_abs_diff(v, coeff * member.psi) / vscale;
    if (res < best.residual) {
      best.matched = member.label;
      best.coefficient = coeff;
      best.residual = res;
    }
  }
  best.in_family = best.residual <= tol;
  return best;
}

namespace {

double scaled_diff(const CVec4& a, const CVec4& b) {
  return max_abs_diff(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

}  // namespace

bool SymmetryLedger::all_pass() const {
  bool ok = p_squared.pass && c_squared.pass && t_squared.pass &&
            cpt_squared.pass && cp_anticommutes.pass && ct_commutes.pass &&
            tp_commutes.pass && lee_wick_evasion && cpt_square_is_plus_identity;
  for (const auto& a : actions) ok = ok && !a.fit.in_family;
  return ok;
}

SymmetryLedger symmetry_ledger(const Kinematics& k, const PhasePair& phases,
                               double tol) {
  const auto family = build_family(k, phases);
  const CMat4 pmat = parity_matrix(k);

  auto P = [&](const CVec4& v) { return pmat * v; };
  auto C = [](const CVec4& v) { return charge_conjugate(v); };
  auto T = [](const CVec4& v) { return time_reverse(v); };
  auto CPT = [&](const CVec4& v) { return C(P(T(v))); };

  SymmetryLedger ledger;
  ledger.tol = tol;

  double rp = 0, rc = 0, rt = 0, rcpt = 0, rcp = 0, rct = 0, rtp = 0;
  for (const auto& member : family) {
    const CVec4& v = member.psi;
    rp = std::max(rp, scaled_diff(P(P(v)), v));
    rc = std::max(rc, scaled_diff(C(C(v)), v));
    rt = std::max(rt, scaled_diff(T(T(v)), -v));
    rcpt = std::max(rcpt, scaled_diff(CPT(CPT(v)), v));
    rcp = std::max(rcp, scaled_diff(C(P(v)), -P(C(v))));
    rct = std::max(rct, scaled_diff(C(T(v)), T(C(v))));
    rtp = std::max(rtp, scaled_diff(T(P(v)), P(T(v))));
  }
  ledger.p_squared = {rp, rp <= tol};
  ledger.c_squared = {rc, rc <= tol};
  ledger.t_squared = {rt, rt <= tol};
  ledger.cpt_squared = {rcpt, rcpt <= tol};
  ledger.cp_anticommutes = {rcp, rcp <= tol};
  ledger.ct_commutes = {rct, rct <= tol};
  ledger.tp_commutes = {rtp, rtp <= tol};

  // P^2 = +1 and T^2 = -1 measured independently: the squares differ.
  ledger.lee_wick_evasion = ledger.p_squared.pass && ledger.t_squared.pass;
  ledger.cpt_square_is_plus_identity = ledger.cpt_squared.pass;

  std::size_t slot = 0;
  for (const char* name : {"C", "T", "P"}) {
    for (const auto& member : family) {
      CVec4 out;
      if (name[0] == 'C')
        out = C(member.psi);
      else if (name[0] == 'T')
        out = T(member.psi);
      else
        out = P(member.psi);
      ledger.actions[slot++] =
          SymmetryAction{name, member.label, out, family_fit(out, family, tol)};
    }
  }
  return ledger;
}

}  // namespace spinorlab
