#include <gtest/gtest.h>

#include "support/generators.hpp"

namespace gqca::testing {
namespace {

constexpr int kCases = 250;

// Alternates small coefficients with ones whose integers overflow 64 bits.
Coefficient draw(Rng& rng, int i) {
  CoeffShape s;
  if (i % 4 == 3) s.big_digits = 30;
  return random_coefficient(rng, s);
}

TEST(CoefficientProperties, AdditionIsAbelianGroup) {
  Rng rng(101);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const Coefficient a = draw(rng, i), b = draw(rng, i), c = draw(rng, i);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a + Coefficient(), a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a - b, a + (-b));
  }
}

TEST(CoefficientProperties, MultiplicationIsCommutativeMonoid) {
  Rng rng(102);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const Coefficient a = draw(rng, i), b = draw(rng, i), c = draw(rng, i);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * Coefficient(1), a);
    EXPECT_TRUE((a * Coefficient()).is_zero());
  }
}

TEST(CoefficientProperties, Distributivity) {
  Rng rng(103);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const Coefficient a = draw(rng, i), b = draw(rng, i), c = draw(rng, i);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(CoefficientProperties, QPowersAreUnits) {
  Rng rng(104);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const int r = uniform(rng, -20, 20);
    const Coefficient a = draw(rng, i);
    EXPECT_EQ(Coefficient::q_power(r) * Coefficient::q_power(-r), Coefficient(1));
    EXPECT_EQ(a.shifted(r), a * Coefficient::q_power(r));
    EXPECT_EQ(Coefficient::q_power(r).as_unit_q_power(), (QUnit{1, r}));
  }
}

TEST(CoefficientProperties, BarIsRingInvolution) {
  Rng rng(105);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const Coefficient a = draw(rng, i), b = draw(rng, i);
    EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    EXPECT_EQ(bar(a + b), bar(a) + bar(b));
    EXPECT_EQ(bar(bar(a)), a);
    EXPECT_EQ(bar(a + bar(a)), a + bar(a));
  }
}

TEST(CoefficientProperties, SpecializationIsHomomorphism) {
  Rng rng(106);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const Coefficient a = draw(rng, i), b = draw(rng, i);
    for (const auto& [q1, h0] : {std::pair{true, true}, std::pair{true, false},
                                std::pair{false, true}}) {
      EXPECT_EQ((a * b).specialize(q1, h0), a.specialize(q1, h0) * b.specialize(q1, h0));
      EXPECT_EQ((a + b).specialize(q1, h0), a.specialize(q1, h0) + b.specialize(q1, h0));
    }
    EXPECT_TRUE(a.specialize(true, true).as_integer().has_value());
  }
}

TEST(CoefficientProperties, PositivityClosedUnderSumAndProduct) {
  Rng rng(107);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    const Coefficient a = random_nonneg_coefficient(rng);
    const Coefficient b = random_nonneg_coefficient(rng);
    ASSERT_TRUE(is_positive(a) && is_positive(b));
    EXPECT_TRUE(is_positive(a + b));
    EXPECT_TRUE(is_positive(a * b));
    EXPECT_TRUE(is_positive(bar(a)));
  }
}

TEST(CoefficientProperties, CanonicalFormIsOrderIndependent) {
  Rng rng(108);
  for (int i = 0; i < kCases; ++i) {
    SCOPED_TRACE(i);
    std::vector<CoeffTerm> terms;
    const int n = uniform(rng, 0, 8);
    for (int t = 0; t < n; ++t) {
      terms.push_back({uniform(rng, -3, 3), uniform(rng, 0, 2), random_integer(rng, 3)});
    }
    const Coefficient a = Coefficient::from_terms(terms);
    std::shuffle(terms.begin(), terms.end(), rng);
    EXPECT_EQ(Coefficient::from_terms(terms), a);
    Coefficient summed;
    for (const auto& t : terms) summed += Coefficient::monomial(t.c, t.qhalf, t.hdeg);
    EXPECT_EQ(summed, a);
    for (const auto& t : a.terms()) EXPECT_NE(t.c, 0);
  }
}

}  // namespace
}  // namespace gqca::testing
