#include "spinorlab/spinors.hpp"

#include <cmath>

#include "spinorlab/errors.hpp"

namespace spinorlab {

std::array<SpinorLabel, 4> all_labels() {
  return {SpinorLabel{Kind::S, Helicity::PlusMinus},
          SpinorLabel{Kind::S, Helicity::MinusPlus},
          SpinorLabel{Kind::A, Helicity::PlusMinus},
          SpinorLabel{Kind::A, Helicity::MinusPlus}};
}

std::string to_string(const SpinorLabel& l) {
  std::string s = l.kind == Kind::S ? "S" : "A";
  s += l.helicity == Helicity::PlusMinus ? "+-" : "-+";
  return s;
}

PhasePair::PhasePair(cplx bp, cplx bm) : beta_plus(bp), beta_minus(bm) {
  if (std::abs(bp) == 0.0 || std::abs(bm) == 0.0)
    throw ZeroPhase("phase pair: both phases must be nonzero");
}

bool PhasePair::degenerate(double tol) const {
  return std::abs(std::norm(beta_plus) - 1.0) <= tol ||
         std::abs(std::norm(beta_minus) - 1.0) <= tol;
}

bool PhasePair::unit_modulus_product(double tol) const {
  return std::abs(std::norm(beta_plus * beta_minus) - 1.0) <= tol;
}

HelicityBasis helicity_basis(const Kinematics& k) {
  const double rm = std::sqrt(k.m);
  const double c = std::cos(0.5 * k.theta);
  const double s = std::sin(0.5 * k.theta);
  const cplx em = std::polar(1.0, -0.5 * k.phi);
  const cplx ep = std::polar(1.0, 0.5 * k.phi);
  HelicityBasis b;
  b.plus = CVec2{{rm * c * em, rm * s * ep}};
  b.minus = CVec2{{-rm * s * em, rm * c * ep}};
  return b;
}

FlagDipoleSpinor build_spinor(SpinorLabel label, const Kinematics& k,
                              const PhasePair& phases) {
  const HelicityBasis hb = helicity_basis(k);
  const BoostFactors bf = boost_factors(k);
  const CMat2 theta = wigner_theta();

  CVec2 up, low;
  cplx scale;
  if (label.helicity == Helicity::PlusMinus) {
    const cplx sign = label.kind == Kind::S ? -1.0 : 1.0;
    up = (sign / std::conj(phases.beta_minus)) * (theta * hb.minus.conjugate());
    low = phases.beta_plus * hb.minus;
    scale = bf.b_plus;
  } else {
    const cplx sign = label.kind == Kind::S ? 1.0 : -1.0;
    up = (sign / std::conj(phases.beta_plus)) * (theta * hb.plus.conjugate());
    low = phases.beta_minus * hb.plus;
    scale = bf.b_minus;
  }
  return FlagDipoleSpinor{label, scale * join(up, low), k, phases};
}

std::array<FlagDipoleSpinor, 4> build_family(const Kinematics& k,
                                             const PhasePair& phases) {
  const auto labels = all_labels();
  return {build_spinor(labels[0], k, phases), build_spinor(labels[1], k, phases),
          build_spinor(labels[2], k, phases), build_spinor(labels[3], k, phases)};
}

}  // namespace spinorlab
