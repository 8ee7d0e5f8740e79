#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinorlab/json_io.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/spinors.hpp"

namespace spinorlab {

struct CheckResult {
  std::string name;
  double max_residual;
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  double tol = 1e-10;
  bool with_controls = false;
};

// The whole identity suite at one point: Dirac-dual degeneracy, Gram table,
// the dual-structure operator (involution, inverse, chirality, block shape,
// helicity flip, closed form where applicable, boost covariance), new-dual
// pairings and spin-sum actions, covariants with their quadratic residuals
// and class, and the discrete-symmetry ledger. Negative controls (corrupted
// current, scrambled covariance transport) are opt-in and pass only when the
// corruption is detected.
struct Report {
  int schema_version = 1;
  std::string mode;  // "verify" | "sweep"
  std::string precision = "double";
  std::optional<std::uint64_t> seed;
  int samples = 1;
  double tolerance = 1e-10;
  std::vector<CheckResult> checks;
  json details;
  bool overall_pass = false;
};

Report verify_report(const Kinematics& k, const PhasePair& phases,
                     const VerifyOptions& opts);

struct SweepSpec {
  int count = 1000;
  std::uint64_t seed = 42;
  VerifyOptions opts;
  // Either part may be pinned; the sampler fills whatever is left free.
  std::optional<Kinematics> fixed_kin;
  std::optional<PhasePair> fixed_phases;
};

// Worst residual per check across all sampled points.
Report sweep_report(const SweepSpec& spec);

json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace spinorlab
