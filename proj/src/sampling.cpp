#include "spinorlab/sampling.hpp"

#include <cmath>
#include <numbers>

namespace spinorlab {

namespace {
constexpr double kBandLo = 0.85;
constexpr double kBandHi = 1.0 / 0.85;

bool in_band(double r) { return r >= kBandLo && r <= kBandHi; }
}  // namespace

double SampleStream::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double SampleStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double SampleStream::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

Kinematics SampleStream::kinematics() {
  const double m = log_uniform(0.1, 10.0);
  const double p = m * uniform(0.0, 10.0);
  const double theta = std::acos(uniform(-1.0, 1.0));
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return Kinematics(m, p, theta, phi);
}

PhasePair SampleStream::phases() {
  auto modulus = [&] {
    double r = log_uniform(0.3, 3.0);
    while (in_band(r)) r = log_uniform(0.3, 3.0);
    return r;
  };
  const double rp = modulus();
  double rm = modulus();
  while (in_band(rp * rm)) rm = modulus();
  const double ap = uniform(0.0, 2.0 * std::numbers::pi);
  const double am = uniform(0.0, 2.0 * std::numbers::pi);
  return PhasePair(std::polar(rp, ap), std::polar(rm, am));
}

PhasePair SampleStream::boundary_phases() {
  const double ap = uniform(0.0, 2.0 * std::numbers::pi);
  const double am = uniform(0.0, 2.0 * std::numbers::pi);
  return PhasePair(std::polar(1.0, ap), std::polar(1.0, am));
}

}  // namespace spinorlab
