#pragma once

#include <stdexcept>
#include <string>

namespace sftgw {

class Monomial;

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bounds under which every computation is exact. A monomial is retained
// iff it satisfies every bound below; dropping monomials is a ring
// homomorphism for all of them except the h window, whose lower end is a
// guard (an h-exponent below it throws instead of being silently dropped).
struct TruncationContext {
  int max_energy = 6;       // bound on sum of winding * multiplicity, per end and per q/p side
  int max_z = 5;
  int h_min = -64;
  int h_max = 64;
  int max_s_order = 4;      // total degree in the s_{2,n}
  int max_n = 6;            // largest descendant index n in s_{2,n}
  int max_classical = 4;    // total degree in t0, t1, s1, s2

  // Throws TruncationError when the h-exponent falls below h_min.
  bool retains(const Monomial& m) const;

  void validate() const;
  std::string describe() const;
};

}  // namespace sftgw
