#pragma once

#include <array>

#include "spinorlab/algebra.hpp"

namespace spinorlab {

// Only one dual convention enters the covariants; the enum keeps the call
// sites explicit about it.
enum class DualConvention { dirac };

// The sixteen bilinears of a single spinor. sigma is identically real and
// omega identically imaginary (both are reported as complex, unreduced);
// J and K come out real component-wise. S is stored in the index order
// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
struct BilinearSet {
  cplx sigma;
  cplx omega;
  std::array<cplx, 4> J;
  std::array<cplx, 4> K;
  std::array<cplx, 6> S;

  // Largest component magnitude across all sixteen entries; zero tests and
  // residuals are taken relative to this.
  double scale() const;
};

BilinearSet bilinears(const CVec4& psi,
                      DualConvention dual = DualConvention::dirac);

// a.b with metric (+,-,-,-), no conjugation.
cplx minkowski_dot(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b);

// Residuals of the three quadratic identities, which hold for every spinor:
//   r1 = |J.J - sigma^2 - |omega|^2|
//   r2 = |J.K|
//   r3 = |K.K + sigma^2 + |omega|^2|
// (sigma^2 is |sigma|^2; sigma has no imaginary part to begin with.)
struct FpkResiduals {
  double r1, r2, r3;
};

FpkResiduals fpk_residuals(const BilinearSet& b);

struct LounestoClass {
  int class_id;  // 1..6
  double tol;
};

// Decision tree on zero tests at tol * scale():
//   sigma or omega nonzero -> 1 (both), 2 (sigma only), 3 (omega only)
//   both zero -> 4 (K,S nonzero), 5 (K zero, S nonzero), 6 (K nonzero, S zero)
// J identically zero is outside the tree and throws Unclassifiable.
LounestoClass lounesto_classify(const BilinearSet& b, double tol = 1e-8);

}  // namespace spinorlab
