#include "sftgw/weyl.hpp"

#include <set>

namespace sftgw {

namespace {

constexpr int kMaxActionOrder = 512;

struct Contraction {
  Var p;     // p-variable of the left factor
  int p_exp;
  int q_exp;  // exponent of the conjugate q in the right factor
};

Monomial lower_exponent(const Monomial& m, Var v, int by) {
  if (by == 0) return m;
  std::vector<Factor> factors(m.factors().begin(), m.factors().end());
  for (auto& f : factors)
    if (f.var == v) f.exp -= by;
  return Monomial(m.h_exp(), std::move(factors));
}

void contract(const Monomial& a, const Monomial& b, const Rational& coeff,
              const std::vector<Contraction>& pairs, std::size_t index, Poly& out,
              const TruncationContext& ctx) {
  if (index == pairs.size()) {
    Monomial m = a * b;
    if (ctx.retains(m)) out.add_term(m, coeff);
    return;
  }
  const auto& c = pairs[index];
  const int k = c.p.winding();
  const int limit = std::min(c.p_exp, c.q_exp);
  for (int j = 0; j <= limit; ++j) {
    // C(b,j) C(c,j) j! (k hbar)^j
    Rational factor(binomial(c.p_exp, j) * binomial(c.q_exp, j) * factorial(j));
    factor *= pow(Rational(k), j);
    Monomial na = lower_exponent(a, c.p, j);
    Monomial nb = lower_exponent(b, c.p.conjugate(), j);
    nb = nb.with_h(nb.h_exp() + 2 * j);
    contract(na, nb, coeff * factor, pairs, index + 1, out, ctx);
  }
}

}  // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b, const TruncationContext& ctx) {
  Poly out;
  std::vector<Contraction> pairs;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      pairs.clear();
      for (const auto& f : ma.factors()) {
        if (!f.var.is_p()) continue;
        const int qe = mb.exponent(f.var.conjugate());
        if (qe > 0) pairs.push_back({f.var, f.exp, qe});
      }
      contract(ma, mb, ca * cb, pairs, 0, out, ctx);
    }
  }
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b, const TruncationContext& ctx) {
  return weyl_mul(a, b, ctx) - weyl_mul(b, a, ctx);
}

bool is_q_free(const Poly& p) {
  for (const auto& [m, c] : p.terms())
    if (m.q_weight() > 0) return false;
  return true;
}

BosonicState act_left(const WeylElement& hamiltonian, const BosonicState& state,
                      const TruncationContext& ctx) {
  Poly out;
  for (const auto& [mh, ch] : hamiltonian.terms()) {
    std::vector<Factor> derivs;
    std::vector<Factor> rest;
    for (const auto& f : mh.factors()) (f.var.is_q() ? derivs : rest).push_back(f);
    const Monomial multiplier(mh.h_exp(), std::move(rest));
    for (const auto& [ms, cs] : state.terms()) {
      Rational coeff = ch * cs;
      Monomial m = ms;
      bool vanishes = false;
      for (const auto& d : derivs) {
        const Var pv = d.var.conjugate();
        const int have = m.exponent(pv);
        if (have < d.exp) {
          vanishes = true;
          break;
        }
        // (k hbar d/dp)^a p^have
        coeff *= Rational(factorial(have) / factorial(have - d.exp));
        coeff *= pow(Rational(pv.winding()), d.exp);
        m = lower_exponent(m, pv, d.exp);
        m = m.with_h(m.h_exp() + 2 * d.exp);
      }
      if (vanishes) continue;
      m = m * multiplier;
      if (ctx.retains(m)) out.add_term(m, coeff);
    }
  }
  return out;
}

BosonicState exp_act_left(const WeylElement& hamiltonian, const BosonicState& state,
                          const TruncationContext& ctx) {
  Poly sum = state.truncated(ctx);
  Poly term = sum;
  for (int j = 1; !term.is_zero(); ++j) {
    if (j > kMaxActionOrder) throw TruncationError("exponential action does not terminate under truncation");
    term = act_left(hamiltonian, term, ctx) * make_rational(1, j);
    sum += term;
  }
  return sum;
}

namespace {

const GlueNeck* neck_for_lower(const std::vector<GlueNeck>& necks, Var v) {
  if (!v.is_p()) return nullptr;
  for (const auto& n : necks)
    if (n.lower_end == v.end()) return &n;
  return nullptr;
}

const GlueNeck* neck_for_upper(const std::vector<GlueNeck>& necks, Var v) {
  if (!v.is_q()) return nullptr;
  for (const auto& n : necks)
    if (n.upper_end == v.end()) return &n;
  return nullptr;
}

// Splits m into (glued part keyed by lower-end p variables, remainder).
std::pair<Monomial, Monomial> split_lower(const Monomial& m, const std::vector<GlueNeck>& necks) {
  std::vector<Factor> glued, rest;
  for (const auto& f : m.factors()) (neck_for_lower(necks, f.var) ? glued : rest).push_back(f);
  return {Monomial(0, std::move(glued)), Monomial(m.h_exp(), std::move(rest))};
}

std::pair<Monomial, Monomial> split_upper(const Monomial& m, const std::vector<GlueNeck>& necks) {
  std::vector<Factor> glued, rest;
  for (const auto& f : m.factors()) {
    if (const auto* n = neck_for_upper(necks, f.var)) {
      glued.push_back({f.var.conjugate().on_end(n->lower_end), f.exp});
    } else {
      rest.push_back(f);
    }
  }
  return {Monomial(0, std::move(glued)), Monomial(m.h_exp(), std::move(rest))};
}

Poly pair_partition_functions(const Poly& exp_lower, const Poly& exp_upper,
                              const std::vector<GlueNeck>& necks, bool attach_z,
                              const TruncationContext& ctx) {
  std::map<Monomial, std::vector<std::pair<Monomial, Rational>>, MonomialLess> upper_by_key;
  for (const auto& [m, c] : exp_upper.terms()) {
    auto [key, rest] = split_upper(m, necks);
    upper_by_key[key].emplace_back(std::move(rest), c);
  }
  Poly out;
  for (const auto& [m, c] : exp_lower.terms()) {
    auto [key, rest] = split_lower(m, necks);
    auto it = upper_by_key.find(key);
    if (it == upper_by_key.end()) continue;
    // d^a/dq^a q^a = a!, each derivative carrying k*hbar (and z^k if tracked).
    Rational weight(1);
    int h_shift = 0;
    int z_shift = 0;
    for (const auto& f : key.factors()) {
      const int k = f.var.winding();
      weight *= Rational(factorial(f.exp)) * pow(Rational(k), f.exp);
      h_shift += 2 * f.exp;
      if (attach_z) z_shift += f.exp * k * neck_for_lower(necks, f.var)->z_per_winding;
    }
    Monomial base = rest.with_h(rest.h_exp() + h_shift);
    if (z_shift > 0) base = base * Monomial::of(Var::z(), z_shift);
    for (const auto& [urest, uc] : it->second) {
      Monomial prod = base * urest;
      if (ctx.retains(prod)) out.add_term(prod, c * uc * weight);
    }
  }
  return out;
}

// Inverse of a scalar a*h^e*(1 + u) with u carrying only positive h shifts.
Poly invert_scalar(const ScalarSeries& c0, const TruncationContext& ctx) {
  const auto& lead = *c0.terms().begin();
  const int e = lead.first;
  const Rational a = lead.second;
  Poly u;
  for (const auto& [ex, c] : c0.terms())
    if (ex != e) u.add_term(Monomial(ex - e), c / a);
  Poly sum(Rational(1));
  Poly term(Rational(1));
  for (int j = 1; j <= kMaxActionOrder; ++j) {
    term = series_mul(term, -u, ctx);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.shifted_h(-e) * (Rational(1) / a);
}

}  // namespace

Poly glue_partition_function(const Poly& exp_lower, const Poly& exp_upper,
                             const std::vector<GlueNeck>& necks, const TruncationContext& ctx) {
  return pair_partition_functions(exp_lower, exp_upper, necks, true, ctx);
}

GlueResult glue(const WeylElement& lower, const WeylElement& upper, const std::vector<GlueNeck>& necks,
                const TruncationContext& ctx) {
  // Attach z^k to every glued p_k up front so that z truncation prunes exp(lower).
  Poly tracked = lower.mapped([&](const Monomial& m) -> std::optional<std::pair<Monomial, Rational>> {
    int z = 0;
    for (const auto& f : m.factors())
      if (const auto* n = neck_for_lower(necks, f.var)) z += f.exp * f.var.winding() * n->z_per_winding;
    if (z == 0) return std::make_pair(m, Rational(1));
    return std::make_pair(m * Monomial::of(Var::z(), z), Rational(1));
  });
  tracked = tracked.truncated(ctx);

  // Upper terms whose glued q's have no partner among the lower p's die at q = 0.
  std::set<Var> support;
  for (const auto& [m, c] : tracked.terms())
    for (const auto& f : m.factors())
      if (neck_for_lower(necks, f.var)) support.insert(f.var);
  const Poly pruned = upper.filtered([&](const Monomial& m) {
    for (const auto& f : m.factors()) {
      if (const auto* n = neck_for_upper(necks, f.var)) {
        if (!support.contains(f.var.conjugate().on_end(n->lower_end))) return false;
      }
    }
    return true;
  });

  const Poly exp_lower = exp_truncated(tracked, ctx);
  const Poly exp_upper = exp_truncated(pruned, ctx);
  const Poly z = pair_partition_functions(exp_lower, exp_upper, necks, false, ctx);

  GlueResult result;
  result.dropped = z.scalar_part();
  if (result.dropped.is_zero()) throw TruncationError("glued partition function has no constant term");
  const Poly normalized = series_mul(z, invert_scalar(result.dropped, ctx), ctx);
  result.potential = log_truncated(normalized, ctx);
  return result;
}

int grading_degree(const Monomial& m) {
  int d = -2 * m.h_exp();
  for (const auto& f : m.factors()) {
    int v = 0;
    switch (f.var.kind()) {
      case VarKind::kZ: v = 2; break;
      case VarKind::kT1:
      case VarKind::kS2: v = -1; break;
      case VarKind::kT0:
      case VarKind::kS1:
      case VarKind::kOrbit: v = -2; break;
      case VarKind::kS2n: v = 2 * f.var.descendant_index() - 1; break;
    }
    d += v * f.exp;
  }
  return d;
}

std::optional<int> grading_degree(const Poly& e) {
  if (e.is_zero()) return 0;
  std::optional<int> deg;
  for (const auto& [m, c] : e.terms()) {
    const int d = grading_degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

Poly reflect(const Poly& e) {
  return e.mapped([](const Monomial& m) -> std::optional<std::pair<Monomial, Rational>> {
    std::vector<Factor> fs;
    for (const auto& f : m.factors()) fs.push_back({f.var.is_orbit() ? f.var.conjugate() : f.var, f.exp});
    return std::make_pair(Monomial(m.h_exp(), std::move(fs)), Rational(1));
  });
}

Poly relabel_end(const Poly& e, End from, End to) {
  return e.mapped([&](const Monomial& m) -> std::optional<std::pair<Monomial, Rational>> {
    std::vector<Factor> fs;
    for (const auto& f : m.factors())
      fs.push_back({f.var.is_orbit() && f.var.end() == from ? f.var.on_end(to) : f.var, f.exp});
    return std::make_pair(Monomial(m.h_exp(), std::move(fs)), Rational(1));
  });
}

}  // namespace sftgw
