#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sftgw/weyl.hpp"

namespace sftgw {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  // "3,1,1"
  static Partition parse(const std::string& text);
  static Partition ones(int d) { return Partition(std::vector<int>(d, 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  // Order of the centralizer of a permutation of this cycle type.
  Integer centralizer_order() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int d);

struct HurwitzKey {
  int d = 1;
  Partition mu0, mu1, muinf;
};

struct HurwitzValue {
  Rational value;
  int genus = 0;
};

inline constexpr int kDefaultMaxHurwitzDegree = 7;

// (1/d!) #{(s0, s1, sinf) of the given cycle types, s0 s1 sinf = 1, transitive},
// enumerating s1 against one representative of the s0 class. Empty when the
// count vanishes.
std::optional<HurwitzValue> hurwitz_number(const HurwitzKey& key, int max_degree = kDefaultMaxHurwitzDegree);
// Same count by looping over all triples; d <= 4.
std::optional<HurwitzValue> hurwitz_number_raw(const HurwitzKey& key);
// Genus from Riemann-Hurwitz, empty if not a non-negative integer.
std::optional<int> riemann_hurwitz_genus(const HurwitzKey& key);

// (1/d!) #{(a1, b1, ..., ag, bg) : prod [a_i, b_i] = 1}.
Rational commutator_tuple_count(int g, int d);

// Restricts the monodromy over 1 when building the pants potential.
using Mu1Filter = std::function<bool(const Partition&)>;

// Classical part plus sum of H (p^1)^mu0 (p^2)^muinf (q e^{s2})^mu1 hbar^{g-1}
// over degrees with d <= ctx.max_energy.
WeylElement pants_potential(const TruncationContext& ctx, const Mu1Filter& mu1_filter = {},
                            int max_degree = kDefaultMaxHurwitzDegree);

}  // namespace sftgw
