#pragma once

#include "spinorlab/algebra.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/spinors.hpp"

namespace spinorlab {

// A dual (row) vector; pairing with a column vector is a plain contraction,
// no further conjugation.
struct DualRow {
  std::array<cplx, 4> e{};

  const cplx& operator[](std::size_t i) const { return e[i]; }
  cplx& operator[](std::size_t i) { return e[i]; }
};

cplx operator*(const DualRow& row, const CVec4& v);
DualRow operator*(const DualRow& row, const CMat4& m);

// psi-bar: adjoint followed by gamma0.
DualRow dirac_dual(const CVec4& psi);

// M[i][j] = v[i] row[j].
CMat4 outer(const CVec4& v, const DualRow& row);

// 4x4 table of Dirac pairings over the family, Gram order S+-, S-+, A+-, A-+.
// Expected pattern, in units of m: antidiagonal 2 within S, -2 within A,
// zero everywhere else (including every diagonal entry).
CMat4 gram_dirac(const Kinematics& k, const PhasePair& phases);

enum class GammaSource { spin_sum, closed_form };

// The dual-structure operator. Carries the construction context so that
// pairings against spinors from a different point can be rejected.
struct GammaOperator {
  CMat4 matrix;
  GammaSource source;
  Kinematics kin;
  PhasePair phases;
};

// Normative definition:
//   (1/2m) [ S+- sbar+-  +  S-+ sbar-+  -  A+- abar+-  -  A-+ abar-+ ]
// with Dirac duals. Involutive, chirality-preserving, block-diagonal.
GammaOperator gamma_from_spin_sums(const Kinematics& k, const PhasePair& phases);

// Entry functions of the closed form:
//   g  = (sin t / 2) ((E+p) b+^2 + (E-p) b-^2) / (m b+ b-)
//   f1 = e^{+i f} ((E+p) cos^2(t/2) b+^2 - (E-p) sin^2(t/2) b-^2) / (m b+ b-)
//   f2 = e^{-i f} ((E-p) cos^2(t/2) b-^2 - (E+p) sin^2(t/2) b+^2) / (m b+ b-)
// They satisfy g^2 + f1 f2 = 1 for any complex phases.
struct ClosedFormFunctions {
  cplx g, f1, f2;
};

ClosedFormFunctions closed_form_functions(const Kinematics& k,
                                          const PhasePair& phases);

// [[-g*, f1*, 0, 0], [f2*, g*, 0, 0], [0, 0, -g, f2], [0, 0, f1, g]]
// where * is complex conjugation of the whole function value.
GammaOperator gamma_closed_form(const Kinematics& k, const PhasePair& phases);

// The flag-dipole dual: psi-tilde = (Gamma psi)-bar. Self-pairings are +2m for
// kind S and -2m for kind A, independent of momentum and phases.
DualRow flag_dipole_dual(const FlagDipoleSpinor& psi, const GammaOperator& gamma);

// max-abs residual of Gamma(p) - B Gamma(k) B^{-1}, normalized by the larger
// of 1 and the operator magnitude.
double gamma_boost_covariance_check(const Kinematics& k, const PhasePair& phases);

enum class DualKind { dirac, flag_dipole };

// Sum over the two helicity labels of one kind: sum_h psi_h (dual psi_h).
// With the flag-dipole dual this acts as ±2m on the matching kind and
// annihilates the other kind.
CMat4 spin_sum(Kind kind, const Kinematics& k, const PhasePair& phases,
               DualKind dual);

}  // namespace spinorlab
