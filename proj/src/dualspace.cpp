#include "spinorlab/dualspace.hpp"

#include <cmath>

#include "spinorlab/errors.hpp"

namespace spinorlab {

cplx operator*(const DualRow& row, const CVec4& v) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += row.e[i] * v[i];
  return s;
}

DualRow operator*(const DualRow& row, const CMat4& m) {
  DualRow r;
  for (std::size_t j = 0; j < 4; ++j) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += row.e[i] * m(i, j);
    r.e[j] = s;
  }
  return r;
}

DualRow dirac_dual(const CVec4& psi) {
  // gamma0 swaps the chiral blocks, so the row is (conj lower | conj upper).
  return DualRow{{std::conj(psi[2]), std::conj(psi[3]), std::conj(psi[0]),
                  std::conj(psi[1])}};
}

CMat4 outer(const CVec4& v, const DualRow& row) {
  CMat4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[i] * row.e[j];
  return m;
}

CMat4 gram_dirac(const Kinematics& k, const PhasePair& phases) {
  const auto family = build_family(k, phases);
  CMat4 table;
  for (std::size_t i = 0; i < 4; ++i) {
    const DualRow row = dirac_dual(family[i].psi);
    for (std::size_t j = 0; j < 4; ++j) table(i, j) = row * family[j].psi;
  }
  return table;
}

GammaOperator gamma_from_spin_sums(const Kinematics& k, const PhasePair& phases) {
  const auto family = build_family(k, phases);
  CMat4 sum;
  for (const auto& member : family) {
    const cplx sign = member.label.kind == Kind::S ? 1.0 : -1.0;
    sum = sum + sign * outer(member.psi, dirac_dual(member.psi));
  }
  const CMat4 gamma = cplx(1.0 / (2.0 * k.m)) * sum;

  if (phases.degenerate()) {
    // Unreachable with the Gram relations intact; kept as a guarantee.
    if (max_abs_diff(gamma * gamma, CMat4::identity()) > 1e-10)
      throw DegeneratePhases("spin-sum operator: involution lost at unit-modulus phases");
  }
  return GammaOperator{gamma, GammaSource::spin_sum, k, phases};
}

ClosedFormFunctions closed_form_functions(const Kinematics& k,
                                          const PhasePair& phases) {
  const cplx bp2 = phases.beta_plus * phases.beta_plus;
  const cplx bm2 = phases.beta_minus * phases.beta_minus;
  const cplx denom = k.m * phases.beta_plus * phases.beta_minus;
  const double ep = k.E + k.p;
  const double em = k.E - k.p;
  const double c2 = std::cos(0.5 * k.theta) * std::cos(0.5 * k.theta);
  const double s2 = std::sin(0.5 * k.theta) * std::sin(0.5 * k.theta);
  const cplx eip = std::polar(1.0, k.phi);
  const cplx eim = std::polar(1.0, -k.phi);

  ClosedFormFunctions f;
  f.g = 0.5 * std::sin(k.theta) * (ep * bp2 + em * bm2) / denom;
  f.f1 = eip * (ep * c2 * bp2 - em * s2 * bm2) / denom;
  f.f2 = eim * (em * c2 * bm2 - ep * s2 * bp2) / denom;
  return f;
}

GammaOperator gamma_closed_form(const Kinematics& k, const PhasePair& phases) {
  const ClosedFormFunctions f = closed_form_functions(k, phases);
  CMat4 m;
  m(0, 0) = -std::conj(f.g);
  m(0, 1) = std::conj(f.f1);
  m(1, 0) = std::conj(f.f2);
  m(1, 1) = std::conj(f.g);
  m(2, 2) = -f.g;
  m(2, 3) = f.f2;
  m(3, 2) = f.f1;
  m(3, 3) = f.g;
  return GammaOperator{m, GammaSource::closed_form, k, phases};
}

DualRow flag_dipole_dual(const FlagDipoleSpinor& psi, const GammaOperator& gamma) {
  if (!psi.kin.same_point(gamma.kin) || !psi.phases.same_phases(gamma.phases))
    throw MismatchedContext(
        "flag-dipole dual: spinor and operator built from different contexts");
  return dirac_dual(gamma.matrix * psi.psi);
}

double gamma_boost_covariance_check(const Kinematics& k, const PhasePair& phases) {
  const CMat4 at_p = gamma_from_spin_sums(k, phases).matrix;
  const CMat4 at_rest = gamma_from_spin_sums(k.rest(), phases).matrix;
  const CMat4 boost = boost_matrix(k);
  const CMat4 transported = boost * at_rest * inverse(boost);
  return max_abs_diff(at_p, transported) / std::max(1.0, at_p.max_abs());
}

CMat4 spin_sum(Kind kind, const Kinematics& k, const PhasePair& phases,
               DualKind dual) {
  const auto family = build_family(k, phases);
  const GammaOperator gamma = gamma_from_spin_sums(k, phases);
  CMat4 sum;
  for (const auto& member : family) {
    if (member.label.kind != kind) continue;
    const DualRow row = dual == DualKind::dirac
                            ? dirac_dual(member.psi)
                            : flag_dipole_dual(member, gamma);
    sum = sum + outer(member.psi, row);
  }
  return sum;
}

}  // namespace spinorlab
