#pragma once

#include <map>
#include <string>
#include <vector>

#include "sftgw/fermion.hpp"
#include "sftgw/weyl.hpp"

namespace sftgw {

// Power of h in p_k -> h^c p_k that makes phi intertwine the bosonic and
// fermionic Hamiltonians exactly. Fixed at n = 1 on the energy-2 states.
inline constexpr int kEquivarianceExponent = 1;

// Coefficients [z^r] of the bosonic generating function, r = 0..z_order.
std::vector<WeylElement> generating_function(int z_order, const TruncationContext& ctx);

// H_n = hbar^{-1} [z^{n+2}] of the generating function, n >= -1.
WeylElement hamiltonian_bosonic(int n, const TruncationContext& ctx);

// Sum_k mode_weight(k) (1/hbar) :psi_k psi*_k: + constant.
struct DiagonalHamiltonian {
  int n = 0;
  std::map<int, Poly> mode_weight;  // keyed by doubled index
  Poly constant;
};

// mode_weight(k) = h^n k^{n+1}/(n+1)!, constant = h^n (1 - 2^{-(n+1)}) zeta(-(n+1))/(n+1)!,
// for |k| <= ctx.max_energy + 1/2.
DiagonalHamiltonian hamiltonian_fermionic(int n, const TruncationContext& ctx);

// Eigenvalue of `h` on a basis state.
Poly diagonal_eigenvalue(const DiagonalHamiltonian& h, const FermionBasisState& s);
FermionVector apply_diagonal(const DiagonalHamiltonian& h, const FermionVector& v, const TruncationContext& ctx);

bool check_commute(int m, int n, const TruncationContext& ctx);

// phi composed with p_k -> h^c p_k, c = kEquivarianceExponent.
Poly psi_map(const FermionVector& v, const TruncationContext& ctx);
FermionVector psi_map_inverse(const Poly& s, const TruncationContext& ctx);

struct EquivarianceReport {
  bool holds = true;
  int states_checked = 0;
  std::string first_mismatch;
};

// psi_map(H_n^ferm v) == act_left(H_n at t0 = 0, psi_map(v)) on every basis
// state v of energy <= ctx.max_energy.
EquivarianceReport verify_phi_equivariance(int n, const TruncationContext& ctx);

}  // namespace sftgw
