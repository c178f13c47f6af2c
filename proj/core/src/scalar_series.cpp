#include "sftgw/scalar_series.hpp"

#include <sstream>

namespace sftgw {

ScalarSeries::ScalarSeries(Rational c, int h_exp) {
  if (c != 0) terms_.emplace(h_exp, std::move(c));
}

Rational ScalarSeries::coeff(int h_exp) const {
  auto it = terms_.find(h_exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ScalarSeries::add(int h_exp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(h_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ScalarSeries::has_integer_hbar_powers() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

ScalarSeries& ScalarSeries::operator+=(const ScalarSeries& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ScalarSeries& ScalarSeries::operator-=(const ScalarSeries& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ScalarSeries& ScalarSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
  ScalarSeries out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

ScalarSeries ScalarSeries::shifted(int h_shift) const {
  ScalarSeries out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + h_shift, c);
  return out;
}

std::string ScalarSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << sftgw::to_string(c);
    if (e != 0) os << "*h^" << e;
  }
  return os.str();
}

}  // namespace sftgw
