#include "sftgw/qdkdv.hpp"

#include <algorithm>
#include <stdexcept>

#include "sftgw/bernoulli.hpp"

namespace sftgw {

namespace {

TruncationContext hamiltonian_context(int z_order, const TruncationContext& ctx) {
  TruncationContext local = ctx;
  local.max_z = z_order;
  local.max_classical = std::max(ctx.max_classical, z_order);
  return local;
}

Poly z_power(int k) { return k == 0 ? Poly(Rational(1)) : Poly(Monomial::of(Var::z(), k), Rational(1)); }

}  // namespace

std::vector<WeylElement> generating_function(int z_order, const TruncationContext& ctx) {
  if (z_order < 0) throw std::invalid_argument("negative z order");
  const TruncationContext local = hamiltonian_context(z_order, ctx);
  const auto s_coeffs = s_function_series(static_cast<unsigned>(z_order));
  const auto inv_s = inverse_s_function_series(static_cast<unsigned>(z_order));

  // z * u~, with mode k dressed by S(h z k).
  Poly zu = series_mul(z_power(1), Poly::var(Var::t0()), local);
  for (int k = 1; k <= ctx.max_energy; ++k) {
    const Poly modes = Poly::var(Var::p(k)) + Poly::var(Var::q(k));
    for (int j = 0; 2 * j + 1 <= z_order; ++j) {
      const Rational c = s_coeffs[2 * j] * pow(Rational(k), 2 * j);
      if (c == 0) continue;
      zu += series_mul(Poly(Monomial(2 * j, {{Var::z(), 2 * j + 1}}), c), modes, local);
    }
  }
  // Zero Fourier mode of the exponential.
  const Poly integrated = exp_truncated(zu, local).filtered(
      [](const Monomial& m) { return m.p_weight() == m.q_weight(); });
  Poly dressing;
  for (int j = 0; j <= z_order; ++j)
    if (inv_s[j] != 0) dressing.add_term(Monomial(j, j == 0 ? std::vector<Factor>{} : std::vector<Factor>{{Var::z(), j}}), inv_s[j]);
  const Poly full = series_mul(dressing, integrated, local);

  std::vector<WeylElement> out(z_order + 1);
  for (const auto& [m, c] : full.terms()) out[m.z_degree()].add_term(m.without(Var::z()), c);
  return out;
}

WeylElement hamiltonian_bosonic(int n, const TruncationContext& ctx) {
  if (n < -1) throw std::invalid_argument("Hamiltonian index must be >= -1");
  return generating_function(n + 2, ctx)[n + 2].shifted_h(-2);
}

DiagonalHamiltonian hamiltonian_fermionic(int n, const TruncationContext& ctx) {
  if (n < 0) throw std::invalid_argument("fermionic Hamiltonian index must be >= 0");
  DiagonalHamiltonian h;
  h.n = n;
  const Rational inv_fact = inverse_factorial(n + 1);
  const int bound = 2 * ctx.max_energy + 1;
  for (int t = -bound; t <= bound; t += 2) {
    const Rational w = pow(make_rational(t, 2), n + 1) * inv_fact;
    if (w != 0) h.mode_weight[t] = Poly(Monomial(n), w);
  }
  const Rational c = (Rational(1) - Rational(1) / pow(Rational(2), n + 1)) * zeta_neg(n + 1) * inv_fact;
  if (c != 0) h.constant = Poly(Monomial(n), c);
  return h;
}

Poly diagonal_eigenvalue(const DiagonalHamiltonian& h, const FermionBasisState& s) {
  Poly e = h.constant;
  auto weight = [&](int t) {
    auto it = h.mode_weight.find(t);
    if (it == h.mode_weight.end()) throw TruncationError("mode outside the fermionic Hamiltonian's range");
    return it->second;
  };
  for (int a : s.particles()) e += weight(a);
  for (int b : s.holes()) e -= weight(-b);
  return e;
}

FermionVector apply_diagonal(const DiagonalHamiltonian& h, const FermionVector& v, const TruncationContext& ctx) {
  FermionVector out;
  for (const auto& [s, c] : v.terms()) out.add_term(s, series_mul(c, diagonal_eigenvalue(h, s), ctx));
  return out;
}

bool check_commute(int m, int n, const TruncationContext& ctx) {
  const TruncationContext local = hamiltonian_context(std::max(m, n) + 2, ctx);
  return commutator(hamiltonian_bosonic(m, ctx), hamiltonian_bosonic(n, ctx), local).is_zero();
}

Poly psi_map(const FermionVector& v, const TruncationContext& ctx) {
  return rescale_momenta(phi(v, ctx), kEquivarianceExponent);
}

FermionVector psi_map_inverse(const Poly& s, const TruncationContext& ctx) {
  return phi_inverse(rescale_momenta(s, -kEquivarianceExponent), ctx);
}

EquivarianceReport verify_phi_equivariance(int n, const TruncationContext& ctx) {
  EquivarianceReport report;
  const Poly hb = hamiltonian_bosonic(n, ctx).with_zero([](Var v) { return v == Var::t0(); });
  const DiagonalHamiltonian hf = hamiltonian_fermionic(n, ctx);
  for (int e = 0; e <= ctx.max_energy; ++e) {
    for (const auto& s : basis_states(e)) {
      const FermionVector v(s);
      const Poly lhs = psi_map(apply_diagonal(hf, v, ctx), ctx);
      const Poly rhs = act_left(hb, psi_map(v, ctx), ctx);
      ++report.states_checked;
      if (lhs != rhs && report.holds) {
        report.holds = false;
        report.first_mismatch = s.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string();
      }
    }
  }
  return report;
}

}  // namespace sftgw
