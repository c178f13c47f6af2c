#include "sftgw/monomial.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "sftgw/truncation.hpp"

namespace sftgw {

std::string end_name(End e) {
  switch (e) {
    case End::kSingle: return "single";
    case End::kFirst: return "end1";
    case End::kSecond: return "end2";
  }
  return "?";
}

std::string Var::name() const {
  switch (kind()) {
    case VarKind::kZ: return "z";
    case VarKind::kT0: return "t0";
    case VarKind::kT1: return "t1";
    case VarKind::kS1: return "s1";
    case VarKind::kS2: return "s2";
    case VarKind::kS2n: return "s2_" + std::to_string(descendant_index());
    case VarKind::kOrbit: {
      std::string out = is_p() ? "p" : "q";
      if (end() != End::kSingle) {
        out += "^" + std::to_string(static_cast<int>(end())) + "_";
      }
      return out + std::to_string(winding());
    }
  }
  return "?";
}

std::string Var::json_key() const {
  if (!is_orbit()) return name();
  return end_name(end()) + ":" + std::to_string(winding());
}

Monomial::Monomial(int h_exp, std::vector<Factor> factors) : h_(h_exp), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.exp < 0) throw std::invalid_argument("negative exponent on " + f.var.name());
    if (f.exp == 0) continue;
    if (!merged.empty() && merged.back().var == f.var) {
      merged.back().exp += f.exp;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
}

int Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Var x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

int Monomial::energy() const {
  // one slot per (end, q/p)
  std::array<int, 6> w{};
  for (const auto& f : factors_)
    if (f.var.is_orbit()) w[2 * static_cast<int>(f.var.end()) + (f.var.is_p() ? 1 : 0)] += f.var.winding() * f.exp;
  return *std::max_element(w.begin(), w.end());
}

int Monomial::p_weight() const {
  int w = 0;
  for (const auto& f : factors_)
    if (f.var.is_p()) w += f.var.winding() * f.exp;
  return w;
}

int Monomial::q_weight() const {
  int w = 0;
  for (const auto& f : factors_)
    if (f.var.is_q()) w += f.var.winding() * f.exp;
  return w;
}

int Monomial::s_order() const {
  int s = 0;
  for (const auto& f : factors_)
    if (f.var.kind() == VarKind::kS2n) s += f.exp;
  return s;
}

int Monomial::max_descendant_index() const {
  int n = -1;
  for (const auto& f : factors_)
    if (f.var.kind() == VarKind::kS2n) n = std::max(n, f.var.descendant_index());
  return n;
}

int Monomial::classical_degree() const {
  int c = 0;
  for (const auto& f : factors_)
    if (f.var.is_classical()) c += f.exp;
  return c;
}

Monomial Monomial::with_h(int h_exp) const {
  Monomial m = *this;
  m.h_ = h_exp;
  return m;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  m.h_ = h_;
  for (const auto& f : factors_)
    if (f.var != v) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.h_ = a.h_ + b.h_;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->var < ib->var) {
      out.factors_.push_back(*ia++);
    } else if (ib->var < ia->var) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, ia->exp + ib->exp});
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (h_ != 0) {
    sep();
    os << "h";
    if (h_ != 1) os << '^' << h_;
  }
  for (const auto& f : factors_) {
    sep();
    os << f.var.name();
    if (f.exp != 1) os << '^' << f.exp;
  }
  if (first) os << '1';
  return os.str();
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  const auto fa = a.factors();
  const auto fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].var != fb[i].var) return fa[i].var < fb[i].var;
    if (fa[i].exp != fb[i].exp) return fa[i].exp > fb[i].exp;
  }
  if (fa.size() != fb.size()) return fa.size() > fb.size();
  return a.h_exp() < b.h_exp();
}

bool TruncationContext::retains(const Monomial& m) const {
  if (m.h_exp() < h_min) {
    throw TruncationError("h-exponent " + std::to_string(m.h_exp()) + " below window minimum " +
                          std::to_string(h_min));
  }
  if (m.h_exp() > h_max) return false;
  std::array<int, 6> weight{};
  int z = 0, s_order = 0, classical = 0;
  for (const auto& f : m.factors()) {
    switch (f.var.kind()) {
      case VarKind::kZ: z += f.exp; break;
      case VarKind::kS2n:
        if (f.var.descendant_index() > max_n) return false;
        s_order += f.exp;
        break;
      case VarKind::kOrbit:
        weight[2 * static_cast<int>(f.var.end()) + (f.var.is_p() ? 1 : 0)] += f.var.winding() * f.exp;
        break;
      default: classical += f.exp; break;
    }
  }
  return *std::max_element(weight.begin(), weight.end()) <= max_energy && z <= max_z && s_order <= max_s_order && classical <= max_classical;
}

void TruncationContext::validate() const {
  if (max_energy < 0 || max_z < 0 || max_s_order < 0 || max_n < 0 || max_classical < 0)
    throw std::invalid_argument("truncation bounds must be non-negative");
  if (h_min > h_max) throw std::invalid_argument("empty h window");
}

std::string TruncationContext::describe() const {
  std::ostringstream os;
  os << "max_energy=" << max_energy << " max_z=" << max_z << " h=[" << h_min << "," << h_max
     << "] max_s_order=" << max_s_order << " max_n=" << max_n << " max_classical=" << max_classical;
  return os.str();
}

}  // namespace sftgw
