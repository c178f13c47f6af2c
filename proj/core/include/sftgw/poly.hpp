#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "sftgw/monomial.hpp"
#include "sftgw/rational.hpp"
#include "sftgw/scalar_series.hpp"
#include "sftgw/truncation.hpp"

namespace sftgw {

// Sparse polynomial over the global alphabet with coefficients in the
// h-Laurent ring. Terms are stored flat (the h-exponent is part of the key),
// so the ScalarSeries coefficient of a variable shape is the slice of terms
// sharing that shape. Orbit variables are kept in normal order (all q's
// conceptually left of all p's); the commutative product below is the
// product inside the normal-ordering symbol, weyl_mul is the Weyl product.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  explicit Poly(Rational c);
  Poly(const Monomial& m, Rational c);

  static Poly var(Var v) { return Poly(Monomial::of(v), Rational(1)); }
  static Poly h_power(int k) { return Poly(Monomial(k), Rational(1)); }
  static Poly from_series(const ScalarSeries& s);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;
  // h-series multiplying the given variable shape (h of `shape` ignored).
  ScalarSeries coefficient(const Monomial& shape) const;
  // Part with no variables at all (an element of the h-Laurent ring).
  ScalarSeries scalar_part() const { return coefficient(Monomial()); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly shifted_h(int k) const;
  Poly truncated(const TruncationContext& ctx) const;
  Poly filtered(const std::function<bool(const Monomial&)>& keep) const;
  // Rewrites every monomial; images of distinct monomials may collide.
  Poly mapped(const std::function<std::optional<std::pair<Monomial, Rational>>(const Monomial&)>& f) const;
  // Sets each listed variable to zero.
  Poly with_zero(const std::function<bool(Var)>& is_zeroed) const;
  // h -> 1: collapses all h-exponents.
  Poly at_h_one() const;
  // Maximal h-exponent difference check: all exponents even.
  bool has_integer_hbar_powers() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Commutative product projected onto retained monomials.
Poly series_mul(const Poly& a, const Poly& b, const TruncationContext& ctx);

// sum_j f^j / j!, stopping once f^j vanishes under ctx. A pure-h constant
// term is admitted only when all of its exponents are positive.
Poly exp_truncated(const Poly& f, const TruncationContext& ctx);

// Inverse of exp_truncated for f = 1 + (terms vanishing under iteration).
Poly log_truncated(const Poly& f, const TruncationContext& ctx);

// Integer power under ctx.
Poly pow_truncated(const Poly& f, unsigned n, const TruncationContext& ctx);

}  // namespace sftgw
