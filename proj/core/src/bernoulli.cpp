#include "sftgw/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace sftgw {

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  // sum_{k<=m} C(m+1, k) B_k = 0
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * cache[k];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[n];
}

Rational zeta_neg(unsigned m) {
  if (m == 0) throw std::domain_error("zeta_neg expects m >= 1");
  return -bernoulli(m + 1) / Rational(m + 1);
}

std::vector<Rational> s_function_series(unsigned order) {
  // sinh(t/2)/(t/2) = sum_j t^{2j} / (4^j (2j+1)!)
  std::vector<Rational> out(order + 1, Rational(0));
  for (unsigned j = 0; 2 * j <= order; ++j) {
    Integer den = factorial(2 * j + 1);
    den <<= 2 * j;
    out[2 * j] = make_rational(Integer(1), den);
  }
  return out;
}

std::vector<Rational> inverse_s_function_series(unsigned order) {
  const auto s = s_function_series(order);
  std::vector<Rational> inv(order + 1, Rational(0));
  inv[0] = 1;
  for (unsigned n = 1; n <= order; ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) acc += s[k] * inv[n - k];
    inv[n] = -acc;
  }
  return inv;
}

}  // namespace sftgw
