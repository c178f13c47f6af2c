#include "sftgw/curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "sftgw/bernoulli.hpp"

namespace sftgw {

namespace {

Poly monomial_poly(int h_exp, std::vector<Factor> factors, const Rational& c) {
  return Poly(Monomial(h_exp, std::move(factors)), c);
}

Poly classical_part(bool with_t1_s1, const TruncationContext& ctx) {
  Poly out = monomial_poly(-2, {{Var::t0(), 2}, {Var::s2(), 1}}, make_rational(1, 2)) +
             monomial_poly(0, {{Var::s2(), 1}}, make_rational(-1, 24));
  if (with_t1_s1) out += monomial_poly(-2, {{Var::t0(), 1}, {Var::t1(), 1}, {Var::s1(), 1}}, Rational(1));
  return out.truncated(ctx);
}

Poly drop_classical(const Poly& p) {
  return p.with_zero([](Var v) { return v.is_classical(); });
}

// sum_n s_{2,n} c(n) h^{e(n)} over n <= ctx.max_n.
template <typename Coeff, typename HExp>
Poly descendant_sum(const TruncationContext& ctx, Coeff coeff, HExp h_exp) {
  Poly out;
  for (int n = 0; n <= ctx.max_n; ++n) {
    const Rational c = coeff(n);
    if (c != 0) out += monomial_poly(h_exp(n), {{Var::s2n(n), 1}}, c);
  }
  return out.truncated(ctx);
}

// (k_1^{n+1} - k_2^{n+1}) / (n+1)!
Rational eigen_difference(const Rational& a, const Rational& b, int n) {
  return (pow(a, n + 1) - pow(b, n + 1)) * inverse_factorial(n + 1);
}

Poly pants_ones(const TruncationContext& ctx) {
  const int max_degree = std::max(kDefaultMaxHurwitzDegree, ctx.max_energy);
  return pants_potential(ctx, [](const Partition& mu) { return mu.parts().front() == 1; }, max_degree);
}

Poly z_coefficient(const Poly& p, int d) {
  Poly out;
  for (const auto& [m, c] : p.terms())
    if (m.z_degree() == d) out.add_term(m.without(Var::z()), c);
  return out;
}

}  // namespace

Poly cap_potential(const TruncationContext& ctx) {
  const Poly dressing = exp_truncated(Poly::var(Var::s2()), ctx);
  return monomial_poly(-2, {{Var::t0(), 2}, {Var::s2(), 1}}, make_rational(1, 2)).truncated(ctx) +
         monomial_poly(0, {{Var::s2(), 1}}, make_rational(-1, 24)).truncated(ctx) +
         series_mul(dressing, cap_potential_at_zero(), ctx);
}

Poly cap_potential_at_zero() { return monomial_poly(-2, {{Var::p(1), 1}}, Rational(1)); }

DescendantCapState descendant_cap_state(const TruncationContext& ctx) {
  const Poly start = exp_truncated(cap_potential_at_zero(), ctx);
  DescendantCapState out;

  Poly flow;
  for (int n = 0; n <= ctx.max_n; ++n) {
    const Poly h = hamiltonian_bosonic(n, ctx).with_zero([](Var v) { return v == Var::t0(); });
    flow += series_mul(Poly::var(Var::s2n(n)), h, ctx);
  }
  out.bosonic = exp_act_left(flow, start, ctx);

  std::map<int, Poly> weights;
  Poly constant;
  for (int n = 0; n <= ctx.max_n; ++n) {
    const DiagonalHamiltonian h = hamiltonian_fermionic(n, ctx);
    const Poly s = Poly::var(Var::s2n(n));
    for (const auto& [k, w] : h.mode_weight) weights[k] += series_mul(s, w, ctx);
    constant += series_mul(s, h.constant, ctx);
  }
  const FermionVector v = diagonal_exp(weights, psi_map_inverse(start, ctx), ctx);
  out.fermionic = series_mul(psi_map(v, ctx), exp_truncated(constant, ctx), ctx);
  return out;
}

Poly u_potential(const TruncationContext& ctx) {
  return glue(cap_potential_at_zero(), pants_ones(ctx), {{End::kSingle, End::kSingle, 0}}, ctx).potential;
}

Poly u_closed_form(const TruncationContext& ctx) {
  Poly out = classical_part(true, ctx);
  for (int k = 1; k <= ctx.max_energy; ++k) {
    const Poly dressing = exp_truncated(Poly::var(Var::s2()) * Rational(k), ctx);
    const Poly mode = monomial_poly(-2, {{Var::p(End::kFirst, k), 1}, {Var::p(End::kSecond, k), 1}}, make_rational(1, k));
    out += series_mul(mode, dressing, ctx);
  }
  return out;
}

GlueResult elliptic_potential(const TruncationContext& ctx) {
  if (ctx.max_z < 1) throw TruncationError("elliptic potential needs max_z >= 1");
  // z^d sits on a neck of winding weight d, so degree and energy coincide.
  TruncationContext local = ctx;
  local.max_energy = ctx.max_z;
  const Poly u = u_potential(local);
  const Poly u_zero = drop_classical(u);
  return glue(u, reflect(u_zero), {{End::kFirst, End::kFirst, 1}, {End::kSecond, End::kSecond, 0}}, local);
}

std::vector<Rational> eta_log_series(int max_d) {
  std::vector<Rational> out(std::max(max_d, 0) + 1, Rational(0));
  for (int d = 1; d <= max_d; ++d) {
    long sigma = 0;
    for (int k = 1; k <= d; ++k)
      if (d % k == 0) sigma += k;
    out[d] = make_rational(sigma, d);
  }
  return out;
}

Poly elliptic_closed_form(const TruncationContext& ctx) {
  Poly out = classical_part(true, ctx);
  const auto eta = eta_log_series(ctx.max_z);
  for (int d = 1; d <= ctx.max_z; ++d) {
    const Poly dressing = exp_truncated(Poly::var(Var::s2()) * Rational(d), ctx);
    out += series_mul(monomial_poly(0, {{Var::z(), d}}, eta[d]), dressing, ctx);
  }
  return out;
}

GlueResult curve_potential(int g, const TruncationContext& ctx, ZPlacement placement) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (g == 0)
    return glue(cap_potential(ctx), reflect(cap_potential_at_zero()), {{End::kSingle, End::kSingle, 1}}, ctx);
  if (g == 1) return elliptic_potential(ctx);

  TruncationContext local = ctx;
  local.max_energy = ctx.max_z;
  const Poly pants = drop_classical(pants_potential(local));
  const Poly u = drop_classical(u_potential(local));
  const int handle_z = placement == ZPlacement::kHandleNeck ? 1 : 0;
  const int neck_z = 1 - handle_z;

  // One-holed tori with a positive end.
  const std::vector<GlueNeck> handle_necks = {{End::kFirst, End::kFirst, 0}, {End::kSecond, End::kSecond, 0}};
  std::vector<GlueNeck> first_necks = handle_necks;
  first_necks[0].z_per_winding = handle_z;
  const Poly torus_z = glue(u, reflect(pants), first_necks, local).potential;
  const Poly torus = handle_z ? glue(u, reflect(pants), handle_necks, local).potential : torus_z;

  Poly chain = torus_z;
  if (g > 2) {
    // Cylinder carrying one extra handle.
    const Poly cylinder = glue(pants, reflect(pants), handle_necks, local).potential;
    for (int i = 2; i < g; ++i) chain = glue(chain, cylinder, {{End::kSingle, End::kSingle, 0}}, local).potential;
  }
  return glue(chain, reflect(torus), {{End::kSingle, End::kSingle, neck_z}}, local);
}

P1Potential p1_descendant_potential(int d, const TruncationContext& ctx) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  // Only p-weight d reaches z^d after gluing.
  TruncationContext local = ctx;
  local.max_energy = d;
  local.max_z = d;
  const DescendantCapState state = descendant_cap_state(local);
  const Poly undecorated = exp_truncated(reflect(cap_potential_at_zero()), local);
  const std::vector<GlueNeck> neck = {{End::kSingle, End::kSingle, 1}};
  auto potential = [&](const Poly& s) {
    return z_coefficient(log_truncated(glue_partition_function(s, undecorated, neck, local), local), d);
  };
  return {potential(state.bosonic), potential(state.fermionic)};
}

Poly p1_degree0_closed_form(bool printed, const TruncationContext& ctx) {
  return descendant_sum(
      ctx,
      [](int n) -> Rational {
        return (Rational(1) - Rational(1) / pow(Rational(2), n + 1)) * zeta_neg(n + 1) * inverse_factorial(n + 1);
      },
      [printed](int n) { return printed ? 2 * n : n; });
}

Poly p1_degree1_closed_form(const TruncationContext& ctx) {
  const Poly exponent = descendant_sum(
      ctx,
      [](int n) -> Rational {
        if (n % 2) return Rational(0);
        const int m = n / 2;
        return Rational(1) / (pow(Rational(2), 2 * m) * Rational(factorial(2 * m + 1)));
      },
      [](int n) { return n; });
  return exp_truncated(exponent, ctx).shifted_h(-2);
}

std::string reading_name(HalfPowerReading r) {
  switch (r) {
    case HalfPowerReading::kHbarHalfN: return "hbar^(n/2)";
    case HalfPowerReading::kHalfHbarN: return "hbar^n/2";
    case HalfPowerReading::kHbarHalfNMinusOne: return "hbar^((n-2)/2)";
  }
  return "";
}

Poly p1_degree2_printed(HalfPowerReading reading, const TruncationContext& ctx) {
  const Rational half = make_rational(1, 2);
  const Rational three_halves = make_rational(3, 2);
  const Rational minus_half = make_rational(-1, 2);
  const Rational prefactor = reading == HalfPowerReading::kHalfHbarN ? make_rational(1, 2) : Rational(1);
  auto h_exp = [reading](int n) {
    switch (reading) {
      case HalfPowerReading::kHbarHalfN: return n;
      case HalfPowerReading::kHalfHbarN: return 2 * n;
      case HalfPowerReading::kHbarHalfNMinusOne: return n - 2;
    }
    return n;
  };
  const Poly a = descendant_sum(ctx, [&](int n) -> Rational { return prefactor * eigen_difference(three_halves, minus_half, n); }, h_exp);
  const Poly b = descendant_sum(ctx, [&](int n) -> Rational { return prefactor * eigen_difference(half, three_halves, n); }, h_exp);
  const Poly c = descendant_sum(
      ctx,
      [](int n) -> Rational {
        if (n % 2) return Rational(0);
        const int m = n / 2;
        return Rational(2) / (pow(Rational(2), 2 * m) * Rational(factorial(2 * m + 1)));
      },
      [](int n) { return n; });
  const Poly bracket = exp_truncated(a, ctx) * half - exp_truncated(b, ctx) * half + exp_truncated(c, ctx);
  return (bracket * half).shifted_h(-4);
}

Poly p1_degree2_derived(const TruncationContext& ctx) {
  const Rational half = make_rational(1, 2);
  const Rational three_halves = make_rational(3, 2);
  auto id = [](int n) { return n; };
  const Poly a = descendant_sum(ctx, [&](int n) -> Rational { return eigen_difference(three_halves, -half, n); }, id);
  const Poly b = descendant_sum(ctx, [&](int n) -> Rational { return eigen_difference(half, -three_halves, n); }, id);
  const Poly l = descendant_sum(ctx, [&](int n) -> Rational { return eigen_difference(half, -half, n); }, id);
  const Poly bracket = exp_truncated(a, ctx) * half + exp_truncated(b, ctx) * half - exp_truncated(l * Rational(2), ctx);
  return (bracket * half).shifted_h(-4);
}

}  // namespace sftgw
