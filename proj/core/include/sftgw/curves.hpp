#pragma once

#include <string>
#include <vector>

#include "sftgw/hurwitz.hpp"
#include "sftgw/qdkdv.hpp"

namespace sftgw {

// (1/hbar)[t0^2 s2/2 - hbar s2/24 + e^{s2} p1].
Poly cap_potential(const TruncationContext& ctx);
// The cap at t = s = 0: p1/hbar.
Poly cap_potential_at_zero();

// exp of the descendant cap potential, computed twice: by the bosonic
// Hamiltonians acting on exp(p1/hbar), and through the fermionic diagonal
// form conjugated by the boson-fermion map.
struct DescendantCapState {
  Poly bosonic;
  Poly fermionic;
  bool paths_agree() const { return bosonic == fermionic; }
};
DescendantCapState descendant_cap_state(const TruncationContext& ctx);

// Cap glued into the single end of the pants.
Poly u_potential(const TruncationContext& ctx);
// (1/hbar)[t0^2 s2/2 + t0 t1 s1 - hbar s2/24 + sum (1/k) p1_k p2_k e^{k s2}].
Poly u_closed_form(const TruncationContext& ctx);

// Two halves glued along both ends, z^k on the first neck only.
GlueResult elliptic_potential(const TruncationContext& ctx);
// (1/hbar)[t0^2 s2/2 + t0 t1 s1 - hbar s2/24] + sum_d sigma_1(d)/d (z e^{s2})^d.
Poly elliptic_closed_form(const TruncationContext& ctx);
// [z^d] of -sum_k log(1 - z^k), d = 0..max_d.
std::vector<Rational> eta_log_series(int max_d);

enum class ZPlacement { kSeparatingNeck, kHandleNeck };

// GW potential of a genus-g target. g = 0 glues two caps, g = 1 is the
// elliptic pipeline, g >= 2 chains one-holed tori and handle cylinders at
// t = s = 0.
GlueResult curve_potential(int g, const TruncationContext& ctx, ZPlacement placement = ZPlacement::kSeparatingNeck);

// Stationary descendant potential of P^1 in degree d, as a polynomial in the
// s_{2,n}, from both cap paths.
struct P1Potential {
  Poly bosonic;
  Poly fermionic;
  bool paths_agree() const { return bosonic == fermionic; }
};
P1Potential p1_descendant_potential(int d, const TruncationContext& ctx);

// Closed forms for comparison.
// sum_n s_{2,n} h^{e(n)} (1 - 2^{-(n+1)}) zeta(-(n+1)) / (n+1)! with e(n) = 2n (published) or n.
Poly p1_degree0_closed_form(bool printed, const TruncationContext& ctx);
// (1/hbar) exp(sum_n s_{2,2n} hbar^n / (2^{2n} (2n+1)!)).
Poly p1_degree1_closed_form(const TruncationContext& ctx);

// Readings of the exponent prefactor "hbar^n/2" in the published degree-2 formula.
enum class HalfPowerReading { kHbarHalfN, kHalfHbarN, kHbarHalfNMinusOne };
std::string reading_name(HalfPowerReading r);
// The published degree-2 form under a reading.
Poly p1_degree2_printed(HalfPowerReading reading, const TruncationContext& ctx);
// (1/(2 hbar^2)) [e^A/2 + e^B/2 - e^{2 L}] with A, B the eigenvalue sums of
// P{3/2}H{1/2}, P{1/2}H{3/2} and L that of P{1/2}H{1/2}.
Poly p1_degree2_derived(const TruncationContext& ctx);

}  // namespace sftgw
