#pragma once

#include <vector>

#include "sftgw/rational.hpp"

namespace sftgw {

// n-th Bernoulli number with B_1 = -1/2.
Rational bernoulli(unsigned n);

// zeta(-m) = -B_{m+1} / (m+1) for m >= 1.
Rational zeta_neg(unsigned m);

// Taylor coefficients of S(t) = sinh(t/2) / (t/2) up to t^order.
std::vector<Rational> s_function_series(unsigned order);

// Taylor coefficients of 1/S(t) up to t^order.
std::vector<Rational> inverse_s_function_series(unsigned order);

}  // namespace sftgw
