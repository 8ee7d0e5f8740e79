#pragma once

// Test-side numerics kept independent of the library internals so they can
// serve as cross-checks: a complex Jacobi eigensolver for singular values and
// a Taylor matrix exponential for the boost generator.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "spinorlab/algebra.hpp"

namespace testutil {

using spinorlab::CMat4;
using spinorlab::cplx;
using spinorlab::CVec4;

// Eigenvalues of a Hermitian 4x4 by cyclic Jacobi rotations. Each (p,q)
// rotation strips the phase of a_pq and then applies the real Jacobi angle.
inline std::array<double, 4> hermitian_eigenvalues(CMat4 a) {
  const double stop = 1e-15 * std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= stop) break;

    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= stop) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const cplx u = apq / mag;  // e^{i arg apq}

        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        // Columns, then rows, of the unitary built from diag(1, conj(u))
        // followed by the real rotation [[c, s], [-s, c]].
        for (int k = 0; k < 4; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(u) * akq;
          a(k, q) = s * akp + c * std::conj(u) * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * u * aqk;
          a(q, k) = s * apk + c * u * aqk;
        }
      }
  }
  std::array<double, 4> ev{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(),
                           a(3, 3).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Singular values of a general 4x4, ascending.
inline std::array<double, 4> singular_values(const CMat4& m) {
  const CMat4 h = m.adjoint() * m;
  std::array<double, 4> ev = hermitian_eigenvalues(h);
  for (double& x : ev) x = std::sqrt(std::max(0.0, x));
  return ev;
}

// exp(m) by scaling and squaring over a plain Taylor series. The arguments
// here have max-abs a few units, well inside the comfortable range.
inline CMat4 expm(const CMat4& m) {
  int squarings = 0;
  double scale = m.max_abs();
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const CMat4 x = cplx(std::pow(2.0, -squarings)) * m;

  CMat4 sum = CMat4::identity();
  CMat4 term = CMat4::identity();
  for (int n = 1; n <= 24; ++n) {
    term = cplx(1.0 / n) * (term * x);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace testutil
