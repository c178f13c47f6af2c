#include "sftgw/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sftgw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("bad partition: " + text);
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Integer Partition::centralizer_order() const {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  for (const auto& [part, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

std::string Partition::to_string() const {
  std::string out;
  for (int p : parts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

using Perm = std::vector<std::uint8_t>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint8_t>(i);
  return c;
}

Partition cycle_type(const Perm& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

bool transitive(const Perm& a, const Perm& b) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : {static_cast<std::size_t>(a[i]), static_cast<std::size_t>(b[i])}) {
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

struct SymmetricGroup {
  std::vector<Perm> elements;
};

const SymmetricGroup& symmetric_group(int d) {
  static std::mutex mu;
  static std::map<int, SymmetricGroup> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(d);
  if (inserted) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
      it->second.elements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return it->second;
}

// Permutation whose cycles are consecutive runs of the given lengths.
Perm class_representative(const Partition& mu) {
  Perm p(mu.size());
  int start = 0;
  for (int len : mu.parts()) {
    for (int i = 0; i < len; ++i) p[start + i] = static_cast<std::uint8_t>(start + (i + 1) % len);
    start += len;
  }
  return p;
}

// Every cycle is opened at its smallest element, so each permutation of the
// class is produced exactly once.
void class_members_rec(std::vector<int>& lengths, Perm& p, std::vector<bool>& used, std::vector<Perm>& out) {
  const auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    out.push_back(p);
    return;
  }
  const int start = static_cast<int>(first - used.begin());
  std::vector<int> tried;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    const int len = lengths[li];
    if (std::find(tried.begin(), tried.end(), len) != tried.end()) continue;
    tried.push_back(len);
    lengths.erase(lengths.begin() + static_cast<long>(li));
    std::vector<int> cycle{start};
    used[start] = true;
    std::function<void()> extend = [&] {
      if (static_cast<int>(cycle.size()) == len) {
        for (int i = 0; i < len; ++i) p[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % len]);
        class_members_rec(lengths, p, used, out);
        return;
      }
      for (std::size_t j = 0; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        cycle.push_back(static_cast<int>(j));
        extend();
        cycle.pop_back();
        used[j] = false;
      }
    };
    extend();
    used[start] = false;
    lengths.insert(lengths.begin() + static_cast<long>(li), len);
  }
}

const std::vector<Perm>& class_members(const Partition& mu) {
  static std::mutex mu_lock;
  static std::map<Partition, std::vector<Perm>> cache;
  std::lock_guard lock(mu_lock);
  auto [it, inserted] = cache.try_emplace(mu);
  if (inserted) {
    std::vector<int> lengths = mu.parts();
    Perm p(mu.size());
    std::vector<bool> used(mu.size(), false);
    class_members_rec(lengths, p, used, it->second);
  }
  return it->second;
}

void check_key(const HurwitzKey& key) {
  if (key.d < 1) throw std::invalid_argument("degree must be positive");
  for (const auto* mu : {&key.mu0, &key.mu1, &key.muinf})
    if (mu->size() != key.d) throw std::invalid_argument("partition " + mu->to_string() + " is not of size d");
}

std::optional<HurwitzValue> finish(const HurwitzKey& key, const Rational& value) {
  if (value == 0) return std::nullopt;
  const auto g = riemann_hurwitz_genus(key);
  if (!g) throw std::logic_error("positive Hurwitz count with non-integral genus");
  return HurwitzValue{value, *g};
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (d > 0) partitions_rec(d, d, cur, out);
  return out;
}

std::optional<int> riemann_hurwitz_genus(const HurwitzKey& key) {
  // 2 - 2g = 2d - sum (d - length)
  const int ram = 3 * key.d - key.mu0.length() - key.mu1.length() - key.muinf.length();
  const int two_g = ram - 2 * key.d + 2;
  if (two_g < 0 || two_g % 2 != 0) return std::nullopt;
  return two_g / 2;
}

std::optional<HurwitzValue> hurwitz_number(const HurwitzKey& key, int max_degree) {
  check_key(key);
  if (key.d > max_degree) throw std::invalid_argument("degree " + std::to_string(key.d) + " exceeds enumeration bound");
  const Perm s0 = class_representative(key.mu0);
  long count = 0;
  for (const Perm& s1 : class_members(key.mu1))
    if (cycle_type(compose(s0, s1)) == key.muinf && transitive(s0, s1)) ++count;
  // |C0| * count / d! = count / z_{mu0}
  return finish(key, make_rational(Integer(count), key.mu0.centralizer_order()));
}

std::optional<HurwitzValue> hurwitz_number_raw(const HurwitzKey& key) {
  check_key(key);
  if (key.d > 4) throw std::invalid_argument("raw enumeration is limited to d <= 4");
  const auto& group = symmetric_group(key.d);
  long count = 0;
  for (const auto& s0 : group.elements) {
    if (cycle_type(s0) != key.mu0) continue;
    for (const auto& s1 : group.elements) {
      if (cycle_type(s1) != key.mu1) continue;
      for (const auto& sinf : group.elements) {
        if (cycle_type(sinf) != key.muinf) continue;
        const Perm prod = compose(compose(s0, s1), sinf);
        if (cycle_type(prod).length() == key.d && transitive(s0, s1)) ++count;
      }
    }
  }
  return finish(key, make_rational(Integer(count), factorial(key.d)));
}

Rational commutator_tuple_count(int g, int d) {
  if (g < 0 || d < 1) throw std::invalid_argument("need g >= 0 and d >= 1");
  const auto& group = symmetric_group(d);
  const auto& el = group.elements;
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < el.size(); ++i) index[el[i]] = i;
  // one[c] = #{(a, b) : [a, b] = c}
  std::vector<Integer> one(el.size(), 0);
  for (const auto& a : el) {
    const Perm ai = inverse(a);
    for (const auto& b : el) one[index[compose(compose(a, b), compose(ai, inverse(b)))]] += 1;
  }
  std::vector<Integer> acc(el.size(), 0);
  acc[0] = 1;  // identity is the first permutation in lexicographic order
  for (int i = 0; i < g; ++i) {
    std::vector<Integer> next(el.size(), 0);
    for (std::size_t x = 0; x < el.size(); ++x) {
      if (acc[x] == 0) continue;
      for (std::size_t c = 0; c < el.size(); ++c)
        if (one[c] != 0) next[index[compose(el[x], el[c])]] += acc[x] * one[c];
    }
    acc = std::move(next);
  }
  return make_rational(acc[0], factorial(d));
}

WeylElement pants_potential(const TruncationContext& ctx, const Mu1Filter& mu1_filter, int max_degree) {
  const Poly t0 = Poly::var(Var::t0());
  const Poly t1 = Poly::var(Var::t1());
  const Poly s1 = Poly::var(Var::s1());
  const Poly s2 = Poly::var(Var::s2());
  Poly out = (series_mul(series_mul(t0, t0, ctx), s2, ctx) * make_rational(1, 2) +
              series_mul(series_mul(t0, t1, ctx), s1, ctx))
                 .shifted_h(-2) -
             s2 * make_rational(1, 24);
  out = out.truncated(ctx);
  const int top = std::min(ctx.max_energy, max_degree);
  for (int d = 1; d <= top; ++d) {
    const Poly dressing = exp_truncated(s2 * Rational(d), ctx);
    const auto parts = partitions_of(d);
    for (const auto& mu1 : parts) {
      if (mu1_filter && !mu1_filter(mu1)) continue;
      for (const auto& mu0 : parts) {
        for (const auto& muinf : parts) {
          const auto h = hurwitz_number({d, mu0, mu1, muinf}, max_degree);
          if (!h) continue;
          std::map<Var, int> exps;
          for (int k : mu0.parts()) ++exps[Var::p(End::kFirst, k)];
          for (int k : muinf.parts()) ++exps[Var::p(End::kSecond, k)];
          for (int k : mu1.parts()) ++exps[Var::q(End::kSingle, k)];
          std::vector<Factor> factors;
          for (const auto& [v, e] : exps) factors.push_back({v, e});
          const Monomial m(2 * (h->genus - 1), std::move(factors));
          if (!ctx.retains(m)) continue;
          out += series_mul(Poly(m, h->value), dressing, ctx);
        }
      }
    }
  }
  return out;
}

}  // namespace sftgw
