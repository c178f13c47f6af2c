#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sftgw {

// Cylindrical end an orbit variable lives on: the single S^1 end of the
// cap/cylinder/pants bottom, or one of the two top ends of the pants.
enum class End : std::uint8_t { kSingle = 0, kFirst = 1, kSecond = 2 };

std::string end_name(End e);

enum class VarKind : std::uint8_t {
  kZ = 0,
  kT0 = 1,
  kT1 = 2,
  kS1 = 3,
  kS2 = 4,
  kS2n = 5,    // descendant variable s_{2,n}
  kOrbit = 6,  // q_k or p_k on some end
};

// A variable of the global alphabet. The packed code orders variables as
// z, t0, t1, s1, s2, s_{2,0}, s_{2,1}, ..., then orbit variables by
// (end, winding) with q before p.
class Var {
 public:
  static constexpr Var z() { return Var(pack(VarKind::kZ, 0)); }
  static constexpr Var t0() { return Var(pack(VarKind::kT0, 0)); }
  static constexpr Var t1() { return Var(pack(VarKind::kT1, 0)); }
  static constexpr Var s1() { return Var(pack(VarKind::kS1, 0)); }
  static constexpr Var s2() { return Var(pack(VarKind::kS2, 0)); }
  static constexpr Var s2n(int n) { return Var(pack(VarKind::kS2n, static_cast<std::uint32_t>(n))); }
  static constexpr Var q(End e, int k) { return orbit(e, k, false); }
  static constexpr Var p(End e, int k) { return orbit(e, k, true); }
  static constexpr Var q(int k) { return q(End::kSingle, k); }
  static constexpr Var p(int k) { return p(End::kSingle, k); }

  constexpr VarKind kind() const { return static_cast<VarKind>(code_ >> 24); }
  constexpr bool is_orbit() const { return kind() == VarKind::kOrbit; }
  constexpr bool is_p() const { return is_orbit() && (code_ & 1u); }
  constexpr bool is_q() const { return is_orbit() && !(code_ & 1u); }
  constexpr End end() const { return static_cast<End>((code_ >> 16) & 0xffu); }
  constexpr int winding() const { return static_cast<int>((code_ & 0xffffu) >> 1); }
  constexpr int descendant_index() const { return static_cast<int>(code_ & 0xffffffu); }
  constexpr bool is_classical() const {
    const auto k = kind();
    return k == VarKind::kT0 || k == VarKind::kT1 || k == VarKind::kS1 || k == VarKind::kS2;
  }
  constexpr std::uint32_t code() const { return code_; }

  // The same orbit with q and p exchanged.
  constexpr Var conjugate() const { return Var(code_ ^ 1u); }
  constexpr Var on_end(End e) const { return orbit(e, winding(), is_p()); }

  std::string name() const;       // text form: z, t0, s2_3, q3, p^1_2, ...
  std::string json_key() const;   // "single:3" style key for orbit variables

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(std::uint32_t code) : code_(code) {}
  static constexpr std::uint32_t pack(VarKind k, std::uint32_t low) {
    return (static_cast<std::uint32_t>(k) << 24) | low;
  }
  static constexpr Var orbit(End e, int k, bool is_p) {
    return Var(pack(VarKind::kOrbit, (static_cast<std::uint32_t>(e) << 16) |
                                         (static_cast<std::uint32_t>(k) << 1) | (is_p ? 1u : 0u)));
  }

  std::uint32_t code_;
};

struct Factor {
  Var var;
  int exp;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Monomial h^a * prod var^exp. Factors are sorted by variable with positive
// exponents; h (= hbar^{1/2}) may carry any integer exponent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int h_exp) : h_(h_exp) {}
  Monomial(int h_exp, std::vector<Factor> factors);

  static Monomial of(Var v, int exp = 1) { return Monomial(0, {{v, exp}}); }

  int h_exp() const { return h_; }
  std::span<const Factor> factors() const { return factors_; }
  bool is_scalar() const { return factors_.empty(); }
  int exponent(Var v) const;
  int total_degree() const;

  // Gradings used by truncation.
  // Largest winding weight carried by the q's or the p's of a single end.
  int energy() const;
  int p_weight() const;
  int q_weight() const;
  int z_degree() const { return exponent(Var::z()); }
  int s_order() const;
  int max_descendant_index() const;
  int classical_degree() const;

  Monomial with_h(int h_exp) const;
  Monomial without(Var v) const;
  // Drops h; keeps the variable part only.
  Monomial shape() const { return Monomial(0, factors_); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  int h_ = 0;
  std::vector<Factor> factors_;
};

// Canonical order: graded lexicographic over the alphabet (lower total
// degree first; within a degree the larger exponent of the earliest
// variable first), then ascending h.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace sftgw
