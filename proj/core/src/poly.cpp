#include "sftgw/poly.hpp"

#include <limits>
#include <sstream>

namespace sftgw {

namespace {

// Guard against inputs whose powers never leave the retained region.
constexpr int kMaxSeriesOrder = 512;

}  // namespace

Poly::Poly(Rational c) {
  if (c != 0) terms_.emplace(Monomial(), std::move(c));
}

Poly::Poly(const Monomial& m, Rational c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

Poly Poly::from_series(const ScalarSeries& s) {
  Poly out;
  for (const auto& [e, c] : s.terms()) out.terms_.emplace(Monomial(e), c);
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

ScalarSeries Poly::coefficient(const Monomial& shape) const {
  ScalarSeries out;
  const Monomial bare = shape.shape();
  // All h-variants of a shape are contiguous in the canonical order.
  for (auto it = terms_.lower_bound(bare.with_h(std::numeric_limits<int>::min())); it != terms_.end();
       ++it) {
    if (it->first.shape() != bare) break;
    out.add(it->first.h_exp(), it->second);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::shifted_h(int k) const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m.with_h(m.h_exp() + k), c);
  return out;
}

Poly Poly::truncated(const TruncationContext& ctx) const {
  return filtered([&](const Monomial& m) { return ctx.retains(m); });
}

Poly Poly::filtered(const std::function<bool(const Monomial&)>& keep) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Poly Poly::mapped(
    const std::function<std::optional<std::pair<Monomial, Rational>>(const Monomial&)>& f) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    auto image = f(m);
    if (image) out.add_term(image->first, c * image->second);
  }
  return out;
}

Poly Poly::with_zero(const std::function<bool(Var)>& is_zeroed) const {
  return filtered([&](const Monomial& m) {
    for (const auto& f : m.factors())
      if (is_zeroed(f.var)) return false;
    return true;
  });
}

Poly Poly::at_h_one() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.add_term(m.with_h(0), c);
  return out;
}

bool Poly::has_integer_hbar_powers() const {
  for (const auto& [m, c] : terms_)
    if (m.h_exp() % 2 != 0) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (m.is_scalar() && m.h_exp() == 0) {
      os << sftgw::to_string(mag);
    } else if (mag == 1) {
      os << m.to_string();
    } else {
      os << sftgw::to_string(mag) << '*' << m.to_string();
    }
  }
  return os.str();
}

Poly series_mul(const Poly& a, const Poly& b, const TruncationContext& ctx) {
  Poly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      if (ctx.retains(m)) out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly pow_truncated(const Poly& f, unsigned n, const TruncationContext& ctx) {
  Poly out(Rational(1));
  out = out.truncated(ctx);
  for (unsigned i = 0; i < n; ++i) out = series_mul(out, f, ctx);
  return out;
}

namespace {

Poly exp_series(const Poly& g, const TruncationContext& ctx) {
  Poly sum = Poly(Rational(1)).truncated(ctx);
  Poly term = sum;
  for (int j = 1; !term.is_zero(); ++j) {
    if (j > kMaxSeriesOrder) throw TruncationError("exponential does not terminate under truncation");
    term = series_mul(term, g, ctx) * make_rational(1, j);
    sum += term;
  }
  return sum;
}

}  // namespace

Poly exp_truncated(const Poly& f, const TruncationContext& ctx) {
  const Poly g = f.truncated(ctx);
  Poly constant;
  Poly rest;
  for (const auto& [m, c] : g.terms()) {
    if (m.is_scalar()) {
      if (m.h_exp() <= 0)
        throw TruncationError("exponential of a constant with non-positive h-exponent does not terminate");
      constant.add_term(m, c);
    } else {
      rest.add_term(m, c);
    }
  }
  if (constant.is_zero()) return exp_series(rest, ctx);
  return series_mul(exp_series(constant, ctx), exp_series(rest, ctx), ctx);
}

Poly log_truncated(const Poly& f, const TruncationContext& ctx) {
  Poly u = f.truncated(ctx) - Poly(Rational(1));
  for (const auto& [m, c] : u.terms()) {
    if (m.is_scalar() && m.h_exp() <= 0)
      throw TruncationError("logarithm needs constant term 1 + O(h)");
  }
  Poly sum;
  Poly power = Poly(Rational(1));
  for (int j = 1;; ++j) {
    if (j > kMaxSeriesOrder) throw TruncationError("logarithm does not terminate under truncation");
    power = series_mul(power, u, ctx);
    if (power.is_zero()) break;
    sum += power * make_rational(j % 2 == 1 ? 1 : -1, j);
  }
  return sum;
}

}  // namespace sftgw
