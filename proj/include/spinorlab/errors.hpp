#pragma once

#include <stdexcept>
#include <string>

namespace spinorlab {

// Base class so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A phase with |beta| == 0; the constructions divide by conj(beta).
struct ZeroPhase : Error {
  using Error::Error;
};

// Phases on a degenerate locus where a requested guarantee does not hold.
struct DegeneratePhases : Error {
  using Error::Error;
};

// Operands built from different kinematics or phases than the operator.
struct MismatchedContext : Error {
  using Error::Error;
};

struct ZeroSpinor : Error {
  using Error::Error;
};

// Covariants outside the decision tree (J identically zero).
struct Unclassifiable : Error {
  using Error::Error;
};

// Malformed user input: bad config, bad flag values, bad literals.
struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace spinorlab
