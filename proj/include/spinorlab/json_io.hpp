#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "spinorlab/algebra.hpp"
#include "spinorlab/covariants.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/spinors.hpp"

namespace spinorlab {

using json = nlohmann::ordered_json;

// Complex numbers travel as [re, im] everywhere.
json cplx_to_json(const cplx& z);
cplx cplx_from_json(const json& j);

json vec4_to_json(const CVec4& v);
CVec4 vec4_from_json(const json& j);
json mat4_to_json(const CMat4& m);

json kinematics_to_json(const Kinematics& k);
Kinematics kinematics_from_json(const json& j);

json phases_to_json(const PhasePair& p);
PhasePair phases_from_json(const json& j);

json label_to_json(const SpinorLabel& l);
SpinorLabel label_from_json(const json& j);

json bilinears_to_json(const BilinearSet& b);

// A spinor literal is either a labeled construction
//   {"label": {...}, "kin": {...}, "phases": {...}}
// or a raw column vector {"vector": [[re,im] x4]}.
std::variant<FlagDipoleSpinor, CVec4> spinor_literal_from_json(const json& j);
json spinor_literal_to_json(const FlagDipoleSpinor& s);

// Run configuration shared by the CLI subcommands. Any part may be absent;
// flags override file values; sampled parts require a seed.
struct RunConfig {
  std::optional<Kinematics> kin;
  std::optional<PhasePair> phases;
  std::optional<int> count;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

RunConfig run_config_from_json(const json& j);
RunConfig load_run_config(const std::string& path);

}  // namespace spinorlab
