#include "serialize.hpp"

namespace sftgw::cli {

nlohmann::json term_json(const Monomial& m, const Rational& c) {
  nlohmann::json vars = nlohmann::json::object();
  nlohmann::json q = nlohmann::json::object();
  nlohmann::json p = nlohmann::json::object();
  for (const auto& f : m.factors()) {
    if (f.var == Var::z()) continue;
    if (f.var.is_q()) {
      q[f.var.json_key()] = f.exp;
    } else if (f.var.is_p()) {
      p[f.var.json_key()] = f.exp;
    } else {
      vars[f.var.name()] = f.exp;
    }
  }
  nlohmann::json out = {{"h", m.h_exp()}, {"z", m.z_degree()}, {"vars", vars}, {"coeff", to_string(c)}};
  if (!q.empty()) out["q"] = q;
  if (!p.empty()) out["p"] = p;
  return out;
}

nlohmann::json poly_json(const Poly& poly) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : poly.terms()) out.push_back(term_json(m, c));
  return out;
}

nlohmann::json fermion_json(const FermionVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, c] : v.terms()) out.push_back({{"state", s.to_string()}, {"coeff", poly_json(c)}});
  return out;
}

}  // namespace sftgw::cli
