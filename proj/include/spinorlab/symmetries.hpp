#pragma once

#include <array>
#include <string>

#include "spinorlab/algebra.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/spinors.hpp"

namespace spinorlab {

// Parity: (E gamma0 + p sum_j phat_j gamma^j) / m, i.e. the block matrix
// [[0, E + p sigma.phat], [E - p sigma.phat, 0]] / m. Squares to one; equals
// gamma0 at rest.
CMat4 parity_matrix(const Kinematics& k);
CVec4 parity_apply(const FlagDipoleSpinor& psi);

// Charge conjugation gamma2 ∘ K and time reversal i gamma5 gamma2 ∘ K are
// antilinear: implemented as conjugate-then-multiply, never as a matrix.
CVec4 charge_conjugate(const CVec4& psi);
CVec4 time_reverse(const CVec4& psi);

// Least-squares fit of a vector against a single family member.
struct FamilyFit {
  bool in_family;        // some member matches to within tol
  SpinorLabel matched;   // best-fitting member (meaningful when in_family)
  cplx coefficient;      // proportionality constant of the best fit
  double residual;       // max-abs misfit of the best member, relative
};

FamilyFit family_fit(const CVec4& v, const std::array<FlagDipoleSpinor, 4>& family,
                     double tol = 1e-10);

struct SymmetryAction {
  std::string operator_name;  // "C", "T" or "P"
  SpinorLabel input;
  CVec4 output;
  FamilyFit fit;
};

struct IdentityCheck {
  double residual;
  bool pass;
};

// Everything the discrete-symmetry algebra is supposed to satisfy, evaluated
// on all four family members at one point:
//   P^2 = +1, C^2 = +1, T^2 = -1, (CPT)^2 = +1 with CPT applied right to left,
//   {C,P} = 0, [C,T] = 0, [T,P] = 0.
// P^2 = +1 together with T^2 = -1 is the Lee-Wick evasion: P^2 != T^2.
struct SymmetryLedger {
  IdentityCheck p_squared;
  IdentityCheck c_squared;
  IdentityCheck t_squared;
  IdentityCheck cpt_squared;
  IdentityCheck cp_anticommutes;
  IdentityCheck ct_commutes;
  IdentityCheck tp_commutes;
  bool lee_wick_evasion;
  bool cpt_square_is_plus_identity;
  std::array<SymmetryAction, 12> actions;  // C, T, P applied to each label
  double tol;

  bool all_pass() const;
};

SymmetryLedger symmetry_ledger(const Kinematics& k, const PhasePair& phases,
                               double tol = 1e-10);

}  // namespace spinorlab
