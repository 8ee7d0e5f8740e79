#include "spinorlab/json_io.hpp"

#include <fstream>

#include "spinorlab/errors.hpp"

namespace spinorlab {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
    const double re = j[0].get<double>();
    const double im = j.size() == 2 ? j[1].get<double>() : 0.0;
    return cplx(re, im);
  }
  throw InvalidInput("expected a complex number as [re, im]");
}

json vec4_to_json(const CVec4& v) {
  json a = json::array();
  for (std::size_t i = 0; i < 4; ++i) a.push_back(cplx_to_json(v[i]));
  return a;
}

CVec4 vec4_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InvalidInput("expected a 4-component vector");
  CVec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = cplx_from_json(j[i]);
  return v;
}

json mat4_to_json(const CMat4& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(cplx_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json kinematics_to_json(const Kinematics& k) {
  return json{{"m", k.m}, {"p", k.p}, {"theta", k.theta}, {"phi", k.phi}, {"E", k.E}};
}

Kinematics kinematics_from_json(const json& j) {
  for (const char* key : {"m", "p", "theta", "phi"})
    if (!j.contains(key))
      throw InvalidInput(std::string("kinematics: missing field '") + key + "'");
  return Kinematics(j.at("m").get<double>(), j.at("p").get<double>(),
                    j.at("theta").get<double>(), j.at("phi").get<double>());
}

json phases_to_json(const PhasePair& p) {
  return json{{"beta_plus", cplx_to_json(p.beta_plus)},
              {"beta_minus", cplx_to_json(p.beta_minus)}};
}

PhasePair phases_from_json(const json& j) {
  if (!j.contains("beta_plus") || !j.contains("beta_minus"))
    throw InvalidInput("phases: need both beta_plus and beta_minus");
  return PhasePair(cplx_from_json(j.at("beta_plus")),
                   cplx_from_json(j.at("beta_minus")));
}

json label_to_json(const SpinorLabel& l) {
  return json{{"kind", l.kind == Kind::S ? "S" : "A"},
              {"helicity", l.helicity == Helicity::PlusMinus ? "+-" : "-+"}};
}

SpinorLabel label_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::string hel = j.at("helicity").get<std::string>();
  SpinorLabel l;
  if (kind == "S")
    l.kind = Kind::S;
  else if (kind == "A")
    l.kind = Kind::A;
  else
    throw InvalidInput("label: kind must be \"S\" or \"A\"");
  if (hel == "+-")
    l.helicity = Helicity::PlusMinus;
  else if (hel == "-+")
    l.helicity = Helicity::MinusPlus;
  else
    throw InvalidInput("label: helicity must be \"+-\" or \"-+\"");
  return l;
}

json bilinears_to_json(const BilinearSet& b) {
  json jj = json::array();
  for (const auto& x : b.J) jj.push_back(cplx_to_json(x));
  json jk = json::array();
  for (const auto& x : b.K) jk.push_back(cplx_to_json(x));
  json js = json::array();
  for (const auto& x : b.S) js.push_back(cplx_to_json(x));
  return json{{"sigma", cplx_to_json(b.sigma)},
              {"omega", cplx_to_json(b.omega)},
              {"J", jj},
              {"K", jk},
              {"S", js},
              {"S_index_order", "01,02,03,12,13,23"}};
}

std::variant<FlagDipoleSpinor, CVec4> spinor_literal_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("spinor literal: expected an object");
  if (j.contains("vector")) return vec4_from_json(j.at("vector"));
  for (const char* key : {"label", "kin", "phases"})
    if (!j.contains(key))
      throw InvalidInput(std::string("spinor literal: missing field '") + key +
                         "' (or use \"vector\")");
  return build_spinor(label_from_json(j.at("label")),
                      kinematics_from_json(j.at("kin")),
                      phases_from_json(j.at("phases")));
}

json spinor_literal_to_json(const FlagDipoleSpinor& s) {
  return json{{"label", label_to_json(s.label)},
              {"kin", kinematics_to_json(s.kin)},
              {"phases", phases_to_json(s.phases)},
              {"vector", vec4_to_json(s.psi)}};
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("config: expected a JSON object");
  RunConfig c;
  // "kin" accepted as an alias so a spinor-literal point pastes into a config.
  if (j.contains("kinematics")) c.kin = kinematics_from_json(j.at("kinematics"));
  else if (j.contains("kin")) c.kin = kinematics_from_json(j.at("kin"));
  if (j.contains("phases")) c.phases = phases_from_json(j.at("phases"));
  if (j.contains("sampler")) {
    const json& s = j.at("sampler");
    if (s.contains("count")) c.count = s.at("count").get<int>();
    if (s.contains("seed")) c.seed = s.at("seed").get<std::uint64_t>();
  }
  if (j.contains("tol")) c.tol = j.at("tol").get<double>();
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace spinorlab
