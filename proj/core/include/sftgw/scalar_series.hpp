#pragma once

#include <map>
#include <string>

#include "sftgw/rational.hpp"

namespace sftgw {

// Finite Laurent polynomial in h = hbar^{1/2} with rational coefficients.
class ScalarSeries {
 public:
  using Terms = std::map<int, Rational>;

  ScalarSeries() = default;
  explicit ScalarSeries(Rational c, int h_exp = 0);

  static ScalarSeries hbar_power(int k) { return ScalarSeries(Rational(1), 2 * k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int h_exp) const;
  void add(int h_exp, const Rational& c);

  // True when every exponent is even, i.e. only integer powers of hbar occur.
  bool has_integer_hbar_powers() const;

  ScalarSeries& operator+=(const ScalarSeries& o);
  ScalarSeries& operator-=(const ScalarSeries& o);
  ScalarSeries& operator*=(const Rational& c);
  friend ScalarSeries operator+(ScalarSeries a, const ScalarSeries& b) { return a += b; }
  friend ScalarSeries operator-(ScalarSeries a, const ScalarSeries& b) { return a -= b; }
  friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
  friend ScalarSeries operator*(ScalarSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const ScalarSeries&, const ScalarSeries&) = default;

  ScalarSeries shifted(int h_shift) const;
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace sftgw
