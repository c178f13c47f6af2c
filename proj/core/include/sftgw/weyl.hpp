#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sftgw/poly.hpp"

namespace sftgw {

// Elements of the Weyl algebra in q_k, p_k (per end) with [p_k, q_k] = k*hbar,
// stored normal ordered. Classical, descendant and z variables are central.
using WeylElement = Poly;
// A q-free element: a vector of the bosonic Fock space C[[p]].
using BosonicState = Poly;

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b, const TruncationContext& ctx);
WeylElement commutator(const WeylElement& a, const WeylElement& b, const TruncationContext& ctx);

bool is_q_free(const Poly& p);

// Quantizes every q_k as k*hbar*d/dp_k acting on `state`; within each
// normal-ordered term the derivatives act first, then the p's multiply.
// This is a right action: act_left(a, act_left(b, s)) == act_left(b*a, s).
BosonicState act_left(const WeylElement& hamiltonian, const BosonicState& state,
                      const TruncationContext& ctx);

// sum_j act_left^j(state) / j!; throws TruncationError when the series does
// not die out under ctx.
BosonicState exp_act_left(const WeylElement& hamiltonian, const BosonicState& state,
                          const TruncationContext& ctx);

// One pair of ends joined by gluing: p's of `lower_end` in the lower
// potential become hbar*k*z^{z_exponent(k)}*d/dq_k on `upper_end` of the
// upper potential.
struct GlueNeck {
  End lower_end = End::kSingle;
  End upper_end = End::kSingle;
  // z-exponent attached to winding k is k * z_per_winding.
  int z_per_winding = 0;
};

struct GlueResult {
  Poly potential;           // log of the glued partition function, constant dropped
  ScalarSeries dropped;     // h-only constant removed from the log
};

// exp(lower <> upper) = (exp(->lower) exp(upper))|_{glued q = 0}, returned as
// a logarithm with its pure-h constant split off.
GlueResult glue(const WeylElement& lower, const WeylElement& upper, const std::vector<GlueNeck>& necks,
                const TruncationContext& ctx);

// Same pairing without the final logarithm: the partition function.
Poly glue_partition_function(const Poly& exp_lower, const Poly& exp_upper,
                             const std::vector<GlueNeck>& necks, const TruncationContext& ctx);

// Degrees: t1, s2 -> -1; t0, s1, q, p -> -2; h -> -2; z -> +2;
// s_{2,n} -> 2n - 1. Empty optional for inhomogeneous input; 0 for zero.
std::optional<int> grading_degree(const Poly& e);
int grading_degree(const Monomial& m);

// Exchanges q and p on every orbit variable (reverses the cobordism).
Poly reflect(const Poly& e);
// Moves orbit variables from one end to another.
Poly relabel_end(const Poly& e, End from, End to);

}  // namespace sftgw
