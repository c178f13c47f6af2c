#include <gtest/gtest.h>

#include "printers.hpp"

#include "sftgw/hurwitz.hpp"

using namespace sftgw;

namespace {

HurwitzKey key(int d, const char* a, const char* b, const char* c) {
  return {d, Partition::parse(a), Partition::parse(b), Partition::parse(c)};
}

Rational value_or_zero(const std::optional<HurwitzValue>& v) { return v ? v->value : Rational(0); }

}  // namespace

TEST(Partition, ParseAndOrder) {
  const auto p = Partition::parse("1,3,1");
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(p.to_string(), "3,1,1");
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(p.centralizer_order(), 6);
  EXPECT_EQ(Partition::ones(3).centralizer_order(), 6);
  EXPECT_THROW(Partition::parse("2,,1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("0"), std::invalid_argument);
  EXPECT_THROW(Partition::parse(""), std::invalid_argument);
}

TEST(Partition, CountsAndOrder) {
  const std::vector<std::size_t> p = {1, 2, 3, 5, 7, 11, 15};
  for (int d = 1; d <= 7; ++d) EXPECT_EQ(partitions_of(d).size(), p[d - 1]);
  EXPECT_EQ(partitions_of(3).front().to_string(), "3");
}

TEST(HurwitzNumber, Examples) {
  const auto one = hurwitz_number(key(1, "1", "1", "1"));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->value, 1);
  EXPECT_EQ(one->genus, 0);
  const auto two = hurwitz_number(key(2, "2", "2", "1,1"));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->value, make_rational(1, 2));
  EXPECT_EQ(two->genus, 0);
  const auto three = hurwitz_number(key(3, "3", "3", "3"));
  ASSERT_TRUE(three);
  EXPECT_EQ(three->value, make_rational(1, 3));
  EXPECT_EQ(three->genus, 1);
}

TEST(HurwitzNumber, EmptyAndErrors) {
  EXPECT_FALSE(hurwitz_number(key(2, "2", "1,1", "1,1")));
  // disconnected: two sheets never meet
  EXPECT_FALSE(hurwitz_number(key(2, "1,1", "1,1", "1,1")));
  EXPECT_THROW(hurwitz_number(key(8, "8", "8", "8")), std::invalid_argument);
  EXPECT_THROW(hurwitz_number(key(3, "2", "3", "3")), std::invalid_argument);
}

TEST(HurwitzNumber, ClassEnumerationMatchesRawLoops) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& a : partitions_of(d)) {
      for (const auto& b : partitions_of(d)) {
        for (const auto& c : partitions_of(d)) {
          const HurwitzKey k{d, a, b, c};
          const auto fast = hurwitz_number(k);
          const auto raw = hurwitz_number_raw(k);
          ASSERT_EQ(fast.has_value(), raw.has_value()) << a.to_string() << " " << b.to_string() << " " << c.to_string();
          if (fast) {
            EXPECT_EQ(fast->value, raw->value);
            EXPECT_EQ(fast->genus, raw->genus);
          }
        }
      }
    }
  }
}

TEST(HurwitzNumber, SymmetricUnderPermutingProfiles) {
  for (int d = 1; d <= 5; ++d) {
    const auto parts = partitions_of(d);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        for (const auto& c : parts) {
          const Rational v = value_or_zero(hurwitz_number({d, a, b, c}));
          EXPECT_EQ(v, value_or_zero(hurwitz_number({d, b, a, c})));
          EXPECT_EQ(v, value_or_zero(hurwitz_number({d, c, b, a})));
          EXPECT_EQ(v, value_or_zero(hurwitz_number({d, a, c, b})));
        }
      }
    }
  }
}

TEST(HurwitzNumber, DenominatorDividesFactorial) {
  for (int d = 1; d <= 5; ++d) {
    const Integer fact = factorial(d);
    for (const auto& a : partitions_of(d)) {
      for (const auto& b : partitions_of(d)) {
        for (const auto& c : partitions_of(d)) {
          const auto v = hurwitz_number({d, a, b, c});
          if (!v) continue;
          EXPECT_GT(v->value, 0);
          EXPECT_EQ(fact % v->value.get_den(), 0);
          EXPECT_GE(v->genus, 0);
        }
      }
    }
  }
}

TEST(HurwitzNumber, GenusZeroDoubleOneCycle) {
  // d-cycles over 0 and infinity, unramified over 1
  for (int d = 1; d <= 7; ++d) {
    const auto v = hurwitz_number({d, Partition({d}), Partition::ones(d), Partition({d})});
    ASSERT_TRUE(v);
    EXPECT_EQ(v->value, make_rational(1, d));
    EXPECT_EQ(v->genus, 0);
  }
}

TEST(RiemannHurwitz, Genus) {
  EXPECT_EQ(riemann_hurwitz_genus(key(3, "3", "3", "3")), 1);
  EXPECT_EQ(riemann_hurwitz_genus(key(2, "2", "2", "1,1")), 0);
  EXPECT_FALSE(riemann_hurwitz_genus(key(2, "2", "1,1", "1,1")));
}

TEST(CommutatorTupleCount, Examples) {
  EXPECT_EQ(commutator_tuple_count(1, 1), 1);
  EXPECT_EQ(commutator_tuple_count(1, 2), 2);
  EXPECT_EQ(commutator_tuple_count(2, 2), 8);
  // number of conjugacy classes of S3
  EXPECT_EQ(commutator_tuple_count(1, 3), 3);
  // sum over irreducibles of (|G|/dim)^{2g-2}: 36 + 36 + 9
  EXPECT_EQ(commutator_tuple_count(2, 3), 81);
  EXPECT_EQ(commutator_tuple_count(3, 2), 32);
}

TEST(PantsPotential, Examples) {
  TruncationContext ctx;
  ctx.max_energy = 3;
  const Poly pants = pants_potential(ctx);
  const Monomial trivial(-2, {{Var::q(1), 1}, {Var::p(End::kFirst, 1), 1}, {Var::p(End::kSecond, 1), 1}});
  EXPECT_EQ(pants.coeff(trivial), 1);
  const Monomial dressed(-2, {{Var::s2(), 1}, {Var::q(1), 2}, {Var::p(End::kFirst, 2), 1}, {Var::p(End::kSecond, 2), 1}});
  EXPECT_EQ(pants.coeff(dressed), 1);
  EXPECT_EQ(pants.coeff(Monomial(-2, {{Var::t0(), 2}, {Var::s2(), 1}})), make_rational(1, 2));
  EXPECT_EQ(pants.coeff(Monomial(-2, {{Var::t0(), 1}, {Var::t1(), 1}, {Var::s1(), 1}})), 1);
  EXPECT_EQ(pants.coeff(Monomial(0, {{Var::s2(), 1}})), make_rational(-1, 24));
  // genus one term of degree 3
  const Monomial torus(0, {{Var::q(3), 1}, {Var::p(End::kFirst, 3), 1}, {Var::p(End::kSecond, 3), 1}});
  EXPECT_EQ(pants.coeff(torus), make_rational(1, 3));
}

TEST(PantsPotential, FilterAndDegreeBound) {
  TruncationContext ctx;
  ctx.max_energy = 4;
  const Poly only_ones = pants_potential(ctx, [](const Partition& p) { return p == Partition::ones(p.size()); });
  for (const auto& [m, c] : only_ones.terms()) {
    for (const auto& f : m.factors()) {
      if (f.var.is_q()) EXPECT_EQ(f.var.winding(), 1) << m.to_string();
    }
  }
  const Poly low = pants_potential(ctx, {}, 2);
  for (const auto& [m, c] : low.terms()) EXPECT_LE(m.q_weight(), 2) << m.to_string();
}
