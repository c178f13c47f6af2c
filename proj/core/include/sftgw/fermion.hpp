#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sftgw/poly.hpp"

namespace sftgw {

// Half-integer stored as twice its value (always odd).
struct HalfInt {
  int twice = 1;

  static HalfInt from_twice(int t);
  // num/2 for odd num.
  static HalfInt half(int num) { return from_twice(num); }
  Rational value() const { return make_rational(twice, 2); }
  std::string to_string() const;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

// psi_{a_r}...psi_{a_1} psi*_{-b_1}...psi*_{-b_s} |vac> with a's decreasing
// and the psi* indices increasing. Indices are positive and stored doubled
// in ascending order.
class FermionBasisState {
 public:
  FermionBasisState() = default;
  FermionBasisState(std::vector<int> particles_twice, std::vector<int> holes_twice);
  static FermionBasisState vacuum() { return {}; }
  // Parses "P{3/2,1/2}H{1/2,3/2}" (order inside braces is free).
  static FermionBasisState parse(const std::string& text);

  const std::vector<int>& particles() const { return particles_; }
  const std::vector<int>& holes() const { return holes_; }
  bool has_particle(int twice) const;
  bool has_hole(int twice) const;
  int charge() const { return static_cast<int>(particles_.size()) - static_cast<int>(holes_.size()); }
  // Sum of particle and hole indices; integral in charge 0.
  Rational energy() const;
  int energy_twice() const;
  bool is_vacuum() const { return particles_.empty() && holes_.empty(); }
  // Canonical "P{3/2}H{1/2}" form, indices listed in decreasing order.
  std::string to_string() const;

  friend auto operator<=>(const FermionBasisState&, const FermionBasisState&) = default;

 private:
  std::vector<int> particles_;
  std::vector<int> holes_;
};

class FermionVector {
 public:
  using Terms = std::map<FermionBasisState, Poly>;

  FermionVector() = default;
  explicit FermionVector(const FermionBasisState& s, Poly c = Poly(Rational(1)));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const FermionBasisState& s) const;
  void add_term(const FermionBasisState& s, const Poly& c);

  FermionVector& operator+=(const FermionVector& o);
  FermionVector& operator-=(const FermionVector& o);
  FermionVector& operator*=(const Rational& c);
  friend FermionVector operator+(FermionVector a, const FermionVector& b) { return a += b; }
  friend FermionVector operator-(FermionVector a, const FermionVector& b) { return a -= b; }
  friend FermionVector operator*(FermionVector a, const Rational& c) { return a *= c; }
  friend bool operator==(const FermionVector&, const FermionVector&) = default;
  // Multiplies every coefficient by `c` under ctx.
  FermionVector scaled(const Poly& c, const TruncationContext& ctx) const;
  std::string to_string() const;

 private:
  Terms terms_;
};

struct FermionOp {
  enum class Kind { kPsi, kPsiStar };
  Kind kind = Kind::kPsi;
  HalfInt index;

  static FermionOp psi(HalfInt m) { return {Kind::kPsi, m}; }
  static FermionOp psi_star(HalfInt n) { return {Kind::kPsiStar, n}; }
};

// :psi_m psi*_n:
struct Bilinear {
  HalfInt m;
  HalfInt n;
};

enum class AlphaType { kP, kQ };

FermionVector apply_fermion(const FermionOp& op, const FermionVector& v, const TruncationContext& ctx);
FermionVector apply_bilinear(const Bilinear& b, const FermionVector& v, const TruncationContext& ctx);
// kP: sum_j :psi_j psi*_{j-n}: (raises energy by n); kQ: sum_j :psi_j psi*_{j+n}:.
FermionVector apply_alpha(AlphaType type, int n, const FermionVector& v, const TruncationContext& ctx);
// Scales each basis state by exp(sum_{a in P} c(a) - sum_{b in H} c(-b)), i.e.
// the action of exp(sum_k c(k)/hbar :psi_k psi*_k:). Keys are doubled indices.
FermionVector diagonal_exp(const std::map<int, Poly>& c, const FermionVector& v, const TruncationContext& ctx);
// Charge-0 basis states of the given energy, via Frobenius coordinates.
std::vector<FermionBasisState> basis_states(int energy);

// <vac| exp(K(p)) |v>, K(p) = hbar^{-2} sum_n (p_n/n) sum_j :psi_j psi*_{j+n}:.
Poly phi(const FermionVector& v, const TruncationContext& ctx);
// p_n -> sum_j :psi_j psi*_{j-n}: applied to |vac>.
FermionVector phi_inverse(const Poly& s, const TruncationContext& ctx);
// p_k -> h^c p_k on every orbit p variable.
Poly rescale_momenta(const Poly& s, int c);

}  // namespace sftgw
