#pragma once

#include <array>
#include <string>

#include "spinorlab/algebra.hpp"
#include "spinorlab/kinematics.hpp"

namespace spinorlab {

enum class Kind { S, A };

// Ordered (right-hand, left-hand) block helicities.
enum class Helicity { PlusMinus, MinusPlus };

struct SpinorLabel {
  Kind kind;
  Helicity helicity;

  bool operator==(const SpinorLabel&) const = default;
};

// Gram-table order: S+-, S-+, A+-, A-+.
std::array<SpinorLabel, 4> all_labels();

std::string to_string(const SpinorLabel& l);

// The two complex phases entering the construction. Both must be nonzero;
// unit modulus of either one, or of their product, marks a degenerate locus
// (the product locus is where the axial covariant K collapses to zero).
struct PhasePair {
  cplx beta_plus;
  cplx beta_minus;

  PhasePair(cplx bp, cplx bm);

  bool degenerate(double tol = 1e-9) const;
  bool unit_modulus_product(double tol = 1e-9) const;

  bool same_phases(const PhasePair& o) const {
    return beta_plus == o.beta_plus && beta_minus == o.beta_minus;
  }
};

// Helicity eigenstates of sigma.phat, normalized to sqrt(m):
//   plus  = sqrt(m) ( cos(t/2) e^{-i f/2},  sin(t/2) e^{+i f/2} )
//   minus = sqrt(m) (-sin(t/2) e^{-i f/2},  cos(t/2) e^{+i f/2} )
// They satisfy Theta plus* = minus and Theta minus* = -plus.
struct HelicityBasis {
  CVec2 plus;
  CVec2 minus;
};

HelicityBasis helicity_basis(const Kinematics& k);

struct FlagDipoleSpinor {
  SpinorLabel label;
  CVec4 psi;
  Kinematics kin;
  PhasePair phases;
};

// Assembles the labeled four-component spinor:
//   S,+- : B+ ( -conj(b-)^{-1} Theta minus*  |  b+ minus )
//   S,-+ : B- ( +conj(b+)^{-1} Theta plus*   |  b- plus  )
//   A,+- : B+ ( +conj(b-)^{-1} Theta minus*  |  b+ minus )
//   A,-+ : B- ( -conj(b+)^{-1} Theta plus*   |  b- plus  )
FlagDipoleSpinor build_spinor(SpinorLabel label, const Kinematics& k,
                              const PhasePair& phases);

std::array<FlagDipoleSpinor, 4> build_family(const Kinematics& k,
                                             const PhasePair& phases);

}  // namespace spinorlab
