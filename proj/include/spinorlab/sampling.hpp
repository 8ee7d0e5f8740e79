#pragma once

#include <cstdint>
#include <random>

#include "spinorlab/kinematics.hpp"
#include "spinorlab/spinors.hpp"

namespace spinorlab {

// Seeded sample stream. The engine is std::mt19937_64 but the mapping from
// raw bits to doubles is explicit ((x >> 11) * 2^-53), so a seed pins the
// sampled sequence independent of any standard-library distribution choices.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : eng_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);

  // Mass log-uniform in [0.1, 10], p/m uniform in [0, 10],
  // cos(theta) uniform in [-1, 1], phi uniform in [0, 2pi).
  Kinematics kinematics();

  // Moduli log-uniform in [0.3, 3], rejecting the multiplicative band
  // [0.85, 1/0.85] around 1 for each modulus and for their product; arguments
  // uniform in [0, 2pi). The exclusions keep samples off the two degenerate
  // loci: |b±| = 1 (construction constraint) and |b+ b-| = 1 (K collapses,
  // and C/T/P images become proportional to family members exactly there).
  PhasePair phases();

  // Both moduli exactly 1, arguments uniform: the boundary where the family
  // degenerates to class 5.
  PhasePair boundary_phases();

 private:
  std::mt19937_64 eng_;
};

}  // namespace spinorlab
