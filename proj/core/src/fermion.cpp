#include "sftgw/fermion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sftgw {

HalfInt HalfInt::from_twice(int t) {
  if (t % 2 == 0) throw std::invalid_argument("half-integer index must have odd numerator");
  return HalfInt{t};
}

std::string HalfInt::to_string() const { return sftgw::to_string(value()); }

FermionBasisState::FermionBasisState(std::vector<int> particles_twice, std::vector<int> holes_twice)
    : particles_(std::move(particles_twice)), holes_(std::move(holes_twice)) {
  for (auto* set : {&particles_, &holes_}) {
    std::sort(set->begin(), set->end());
    if (std::adjacent_find(set->begin(), set->end()) != set->end())
      throw std::invalid_argument("repeated fermion index");
    for (int t : *set)
      if (t <= 0 || t % 2 == 0) throw std::invalid_argument("fermion index must be a positive half-integer");
  }
}

namespace {

std::vector<int> parse_index_list(const std::string& body) {
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Rational r = parse_rational(item);
    const Rational twice = r * 2;
    if (twice.get_den() != 1) throw std::invalid_argument("bad half-integer: " + item);
    out.push_back(static_cast<int>(twice.get_num().get_si()));
  }
  return out;
}

std::string join_desc(const std::vector<int>& twice) {
  std::string out;
  for (auto it = twice.rbegin(); it != twice.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += HalfInt::from_twice(*it).to_string();
  }
  return out;
}

}  // namespace

FermionBasisState FermionBasisState::parse(const std::string& text) {
  const auto p0 = text.find("P{");
  const auto h0 = text.find("H{");
  if (p0 != 0 || h0 == std::string::npos) throw std::invalid_argument("bad basis state: " + text);
  const auto p1 = text.find('}', p0);
  const auto h1 = text.find('}', h0);
  if (p1 == std::string::npos || h1 != text.size() - 1 || p1 + 1 != h0)
    throw std::invalid_argument("bad basis state: " + text);
  return FermionBasisState(parse_index_list(text.substr(2, p1 - 2)), parse_index_list(text.substr(h0 + 2, h1 - h0 - 2)));
}

bool FermionBasisState::has_particle(int twice) const {
  return std::binary_search(particles_.begin(), particles_.end(), twice);
}

bool FermionBasisState::has_hole(int twice) const {
  return std::binary_search(holes_.begin(), holes_.end(), twice);
}

int FermionBasisState::energy_twice() const {
  return std::accumulate(particles_.begin(), particles_.end(), 0) + std::accumulate(holes_.begin(), holes_.end(), 0);
}

Rational FermionBasisState::energy() const { return make_rational(energy_twice(), 2); }

std::string FermionBasisState::to_string() const {
  return "P{" + join_desc(particles_) + "}H{" + join_desc(holes_) + "}";
}

FermionVector::FermionVector(const FermionBasisState& s, Poly c) { add_term(s, c); }

Poly FermionVector::coeff(const FermionBasisState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Poly() : it->second;
}

void FermionVector::add_term(const FermionBasisState& s, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FermionVector& FermionVector::operator+=(const FermionVector& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

FermionVector& FermionVector::operator-=(const FermionVector& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

FermionVector& FermionVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, p] : terms_) p *= c;
  return *this;
}

FermionVector FermionVector::scaled(const Poly& c, const TruncationContext& ctx) const {
  FermionVector out;
  for (const auto& [s, p] : terms_) out.add_term(s, series_mul(p, c, ctx));
  return out;
}

std::string FermionVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + s.to_string();
  }
  return out;
}

namespace {

struct OpResult {
  FermionBasisState state;
  int sign;
  bool contracted;  // annihilation against an occupied mode: one factor hbar
};

int count_greater(const std::vector<int>& v, int x) {
  return static_cast<int>(v.end() - std::upper_bound(v.begin(), v.end(), x));
}

std::vector<int> inserted(std::vector<int> v, int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

std::vector<int> erased(std::vector<int> v, int x) {
  v.erase(std::lower_bound(v.begin(), v.end(), x));
  return v;
}

std::optional<OpResult> apply_to_state(const FermionOp& op, const FermionBasisState& s) {
  const int t = op.index.twice;
  const auto& P = s.particles();
  const auto& H = s.holes();
  const int np = static_cast<int>(P.size());
  if (op.kind == FermionOp::Kind::kPsi) {
    if (t > 0) {
      // creates particle t
      if (s.has_particle(t)) return std::nullopt;
      const int sign = count_greater(P, t) % 2 ? -1 : 1;
      return OpResult{FermionBasisState(inserted(P, t), H), sign, false};
    }
    // psi_{-b} removes hole b
    const int b = -t;
    if (!s.has_hole(b)) return std::nullopt;
    const int sign = (np + count_greater(H, b)) % 2 ? -1 : 1;
    return OpResult{FermionBasisState(P, erased(H, b)), sign, true};
  }
  if (t < 0) {
    // psi*_{-b} creates hole b
    const int b = -t;
    if (s.has_hole(b)) return std::nullopt;
    const int sign = (np + count_greater(H, b)) % 2 ? -1 : 1;
    return OpResult{FermionBasisState(P, inserted(H, b)), sign, false};
  }
  // psi*_m removes particle m
  if (!s.has_particle(t)) return std::nullopt;
  const int sign = count_greater(P, t) % 2 ? -1 : 1;
  return OpResult{FermionBasisState(erased(P, t), H), sign, true};
}

bool within(const FermionBasisState& s, const TruncationContext& ctx) {
  return s.energy_twice() <= 2 * ctx.max_energy;
}

// Acts on a single state and returns (state, coefficient) pairs.
std::optional<std::pair<FermionBasisState, Rational>> apply_op_state(const FermionOp& op, const FermionBasisState& s,
                                                                     int& h_shift) {
  auto r = apply_to_state(op, s);
  if (!r) return std::nullopt;
  if (r->contracted) h_shift += 2;
  return std::make_pair(std::move(r->state), Rational(r->sign));
}

// Applies ops right to left (ops.back() acts first) to a single state.
void apply_word(const std::vector<FermionOp>& ops, const Rational& scale, const FermionBasisState& s, const Poly& c,
                FermionVector& out, const TruncationContext& ctx) {
  FermionBasisState cur = s;
  Rational coeff = scale;
  int h_shift = 0;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    auto r = apply_op_state(*it, cur, h_shift);
    if (!r) return;
    cur = std::move(r->first);
    coeff *= r->second;
  }
  if (!within(cur, ctx)) return;
  out.add_term(cur, (c.shifted_h(h_shift) * coeff).truncated(ctx));
}

void apply_bilinear_state(const Bilinear& b, const FermionBasisState& s, const Poly& c, FermionVector& out,
                          const TruncationContext& ctx) {
  if (b.m.twice > 0 || b.n.twice > 0) {
    apply_word({FermionOp::psi(b.m), FermionOp::psi_star(b.n)}, Rational(1), s, c, out, ctx);
  } else {
    apply_word({FermionOp::psi_star(b.n), FermionOp::psi(b.m)}, Rational(-1), s, c, out, ctx);
  }
}

}  // namespace

FermionVector apply_fermion(const FermionOp& op, const FermionVector& v, const TruncationContext& ctx) {
  FermionVector out;
  for (const auto& [s, c] : v.terms()) apply_word({op}, Rational(1), s, c, out, ctx);
  return out;
}

FermionVector apply_bilinear(const Bilinear& b, const FermionVector& v, const TruncationContext& ctx) {
  FermionVector out;
  for (const auto& [s, c] : v.terms()) apply_bilinear_state(b, s, c, out, ctx);
  return out;
}

FermionVector apply_alpha(AlphaType type, int n, const FermionVector& v, const TruncationContext& ctx) {
  if (n <= 0) throw std::invalid_argument("alpha mode index must be positive");
  // :psi_j psi*_{j+shift}: summed over j
  const int shift = type == AlphaType::kQ ? n : -n;
  FermionVector out;
  for (const auto& [s, c] : v.terms()) {
    int top = 1;
    for (int t : s.particles()) top = std::max(top, t);
    for (int t : s.holes()) top = std::max(top, t);
    const int bound = top + 2 * n;
    for (int j = -bound; j <= bound; j += 2) {
      const int k = j + 2 * shift;
      apply_bilinear_state({HalfInt::from_twice(j), HalfInt::from_twice(k)}, s, c, out, ctx);
    }
  }
  return out;
}

FermionVector diagonal_exp(const std::map<int, Poly>& c, const FermionVector& v, const TruncationContext& ctx) {
  FermionVector out;
  for (const auto& [s, coeff] : v.terms()) {
    Poly eigen;
    for (int a : s.particles())
      if (auto it = c.find(a); it != c.end()) eigen += it->second;
    for (int b : s.holes())
      if (auto it = c.find(-b); it != c.end()) eigen -= it->second;
    out.add_term(s, series_mul(coeff, exp_truncated(eigen, ctx), ctx));
  }
  return out;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_into(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FermionBasisState> basis_states(int energy) {
  if (energy < 0) return {};
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_into(energy, energy, cur, parts);
  std::vector<FermionBasisState> out;
  for (const auto& lambda : parts) {
    const int len = static_cast<int>(lambda.size());
    std::vector<int> conj(lambda.empty() ? 0 : lambda.front(), 0);
    for (int part : lambda)
      for (int i = 0; i < part; ++i) ++conj[i];
    std::vector<int> a, b;
    for (int i = 0; i < len && lambda[i] > i; ++i) {
      a.push_back(2 * (lambda[i] - i) - 1);
      b.push_back(2 * (conj[i] - i) - 1);
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly phi(const FermionVector& v, const TruncationContext& ctx) {
  Poly result;
  FermionVector term = v;
  for (int order = 0; !term.is_zero(); ++order) {
    result += term.coeff(FermionBasisState::vacuum());
    FermionVector next;
    int top = 0;
    for (const auto& [s, c] : term.terms()) top = std::max(top, s.energy_twice() / 2);
    for (int n = 1; n <= top; ++n) {
      // (p_n / n) hbar^{-2} A_n
      const Poly weight(Monomial(-4, {{Var::p(n), 1}}), make_rational(1, n));
      next += apply_alpha(AlphaType::kQ, n, term, ctx).scaled(weight, ctx);
    }
    term = next * make_rational(1, order + 1);
  }
  return result;
}

FermionVector phi_inverse(const Poly& s, const TruncationContext& ctx) {
  FermionVector out;
  for (const auto& [m, c] : s.terms()) {
    std::vector<Factor> rest;
    FermionVector v(FermionBasisState::vacuum());
    for (const auto& f : m.factors()) {
      if (f.var.is_q()) throw std::invalid_argument("phi_inverse expects a q-free state");
      if (!f.var.is_p()) {
        rest.push_back(f);
        continue;
      }
      for (int i = 0; i < f.exp; ++i) v = apply_alpha(AlphaType::kP, f.var.winding(), v, ctx);
    }
    out += v.scaled(Poly(Monomial(m.h_exp(), std::move(rest)), c), ctx);
  }
  return out;
}

Poly rescale_momenta(const Poly& s, int c) {
  return s.mapped([c](const Monomial& m) -> std::optional<std::pair<Monomial, Rational>> {
    int count = 0;
    for (const auto& f : m.factors())
      if (f.var.is_p()) count += f.exp;
    return std::make_pair(m.with_h(m.h_exp() + c * count), Rational(1));
  });
}

}  // namespace sftgw
