#include "spinorlab/kinematics.hpp"

#include <cmath>

#include "spinorlab/errors.hpp"

namespace spinorlab {

Kinematics::Kinematics(double m_, double p_, double theta_, double phi_)
    : m(m_), p(p_), theta(theta_), phi(phi_), E(std::hypot(p_, m_)) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw InvalidInput("kinematics: mass must be positive and finite");
  if (!(p >= 0.0) || !std::isfinite(p))
    throw InvalidInput("kinematics: momentum must be non-negative and finite");
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw InvalidInput("kinematics: angles must be finite");
}

std::array<double, 3> Kinematics::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

BoostFactors boost_factors(const Kinematics& k) {
  const double a = std::sqrt((k.E + k.m) / (2.0 * k.m));
  const double r = k.p / (k.E + k.m);
  return BoostFactors{a * (1.0 + r), a * (1.0 - r)};
}

double rapidity(const Kinematics& k) { return std::log((k.E + k.p) / k.m); }

CMat4 boost_matrix(const Kinematics& k) {
  // exp(±sigma.phat chi/2) = cosh(chi/2) ± sinh(chi/2) sigma.phat, and
  // e^{±chi/2} are exactly the boost factors.
  const BoostFactors b = boost_factors(k);
  const double ch = 0.5 * (b.b_plus + b.b_minus);
  const double sh = 0.5 * (b.b_plus - b.b_minus);
  const CMat2 sp = helicity_operator(k.theta, k.phi);
  const CMat2 id2 = CMat2::identity();
  return block_diag(cplx(ch) * id2 + cplx(sh) * sp,
                    cplx(ch) * id2 - cplx(sh) * sp);
}

CMat4 boost_generator(const Kinematics& k) {
  const CMat2 sp = helicity_operator(k.theta, k.phi);
  const cplx half_i{0.0, 0.5};
  return block_diag(-half_i * sp, half_i * sp);
}

}  // namespace spinorlab
