#include "spinorlab/covariants.hpp"

#include <cmath>

#include "spinorlab/dualspace.hpp"
#include "spinorlab/errors.hpp"

namespace spinorlab {

double BilinearSet::scale() const {
  double s = std::max(std::abs(sigma), std::abs(omega));
  for (const auto& x : J) s = std::max(s, std::abs(x));
  for (const auto& x : K) s = std::max(s, std::abs(x));
  for (const auto& x : S) s = std::max(s, std::abs(x));
  return s;
}

BilinearSet bilinears(const CVec4& psi, DualConvention) {
  if (psi.max_abs() == 0.0) throw ZeroSpinor("bilinears: zero spinor");

  const GammaBasis& g = gamma_basis();
  const DualRow bar = dirac_dual(psi);

  BilinearSet b;
  b.sigma = bar * psi;
  b.omega = bar * (g.gamma5 * psi);
  for (int mu = 0; mu < 4; ++mu) {
    b.J[mu] = bar * (g.gamma(mu) * psi);
    b.K[mu] = bar * (g.gamma(mu) * (g.gamma5 * psi));
  }
  const cplx half_i{0.0, 0.5};
  std::size_t slot = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const CMat4 comm = g.gamma(mu) * g.gamma(nu) - g.gamma(nu) * g.gamma(mu);
      b.S[slot++] = bar * ((half_i * comm) * psi);
    }
  return b;
}

cplx minkowski_dot(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

FpkResiduals fpk_residuals(const BilinearSet& b) {
  const double s2 = std::norm(b.sigma);
  const double w2 = std::norm(b.omega);
  FpkResiduals r;
  r.r1 = std::abs(minkowski_dot(b.J, b.J) - s2 - w2);
  r.r2 = std::abs(minkowski_dot(b.J, b.K));
  r.r3 = std::abs(minkowski_dot(b.K, b.K) + s2 + w2);
  return r;
}

LounestoClass lounesto_classify(const BilinearSet& b, double tol) {
  const double eps = tol * b.scale();
  auto vec_max = [](const auto& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
  };

  if (vec_max(b.J) <= eps)
    throw Unclassifiable("classify: current J vanishes entirely");

  const bool sigma_zero = std::abs(b.sigma) <= eps;
  const bool omega_zero = std::abs(b.omega) <= eps;
  if (!sigma_zero || !omega_zero) {
    if (!sigma_zero && !omega_zero) return {1, tol};
    return {!sigma_zero ? 2 : 3, tol};
  }

  const bool k_zero = vec_max(b.K) <= eps;
  const bool s_zero = vec_max(b.S) <= eps;
  if (!k_zero && !s_zero) return {4, tol};
  if (k_zero && !s_zero) return {5, tol};
  if (!k_zero && s_zero) return {6, tol};
  throw Unclassifiable("classify: all of sigma, omega, K, S vanish with J nonzero");
}

}  // namespace spinorlab
