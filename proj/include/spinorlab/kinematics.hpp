#pragma once

#include <array>

#include "spinorlab/algebra.hpp"

namespace spinorlab {

// On-shell momentum in polar form. E is derived, never stored independently.
struct Kinematics {
  double m;      // mass, > 0
  double p;      // |three-momentum|, >= 0
  double theta;  // polar angle of phat
  double phi;    // azimuth of phat
  double E;      // sqrt(p^2 + m^2)

  Kinematics(double m_, double p_, double theta_, double phi_);

  // Same mass and direction, p = 0.
  Kinematics rest() const { return Kinematics(m, 0.0, theta, phi); }

  std::array<double, 3> direction() const;

  bool same_point(const Kinematics& o) const {
    return m == o.m && p == o.p && theta == o.theta && phi == o.phi;
  }
};

// B± = sqrt((E+m)/2m) (1 ± p/(E+m)).  B+B- = 1, B+ >= B- > 0,
// B±^2 = (E±p)/m, and B± = e^{±chi/2} for the rapidity chi below.
struct BoostFactors {
  double b_plus;
  double b_minus;
};

BoostFactors boost_factors(const Kinematics& k);

// chi with e^chi = (E+p)/m.
double rapidity(const Kinematics& k);

// blockdiag(exp(+sigma.phat chi/2), exp(-sigma.phat chi/2)); det = 1.
CMat4 boost_matrix(const Kinematics& k);

// kappa with boost_matrix = exp(i kappa chi); antihermitian.
CMat4 boost_generator(const Kinematics& k);

}  // namespace spinorlab
