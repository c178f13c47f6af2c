#pragma once

#include <nlohmann/json.hpp>

#include "sftgw/fermion.hpp"
#include "sftgw/poly.hpp"

namespace sftgw::cli {

// {"h": int, "z": int, "vars": {name: exp}, "q": {"end:k": exp}, "p": {...}, "coeff": "num/den"}
nlohmann::json term_json(const Monomial& m, const Rational& c);
// Terms in canonical monomial order.
nlohmann::json poly_json(const Poly& p);
nlohmann::json fermion_json(const FermionVector& v);

}  // namespace sftgw::cli
