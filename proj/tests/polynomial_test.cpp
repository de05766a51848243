#include "likepowers/polynomial.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace likepowers {
namespace {

using testing::random_poly;

TEST(PolynomialTest, NormalizesTrailingZeros) {
  Polynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial{}.degree(), -1);
}

TEST(PolynomialTest, Add) { EXPECT_EQ(Polynomial{1} + Polynomial({0, 1}), Polynomial({1, 1})); }

TEST(PolynomialTest, MulHandExpansion) {
  // (x - 1)(-1 - x) = 1 - x^2
  EXPECT_EQ(Polynomial({-1, 1}) * Polynomial({-1, -1}), Polynomial({1, 0, -1}));
}

TEST(PolynomialTest, ZeroAnnihilates) {
  EXPECT_TRUE((Polynomial{1, 0, 0} * Polynomial{}).is_zero());
  EXPECT_TRUE((Polynomial{} * Polynomial{3, 4}).is_zero());
}

TEST(PolynomialTest, SubtractionCancelsToZero) {
  Polynomial p{3, -99, 1};
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolynomialTest, DivmodExactFactor) {
  auto [q, r] = divmod(Polynomial{-1, 0, 1}, Polynomial{-1, 1});
  EXPECT_EQ(q, RatPolynomial({1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(PolynomialTest, DivmodRationalQuotient) {
  // x^2 + 1 = (x/2 - 1/4)(2x + 1) + 5/4
  auto [q, r] = divmod(Polynomial{1, 0, 1}, Polynomial{1, 2});
  EXPECT_EQ(q, RatPolynomial({Rational(-1, 4), Rational(1, 2)}));
  EXPECT_EQ(r, RatPolynomial({Rational(5, 4)}));
}

TEST(PolynomialTest, DivmodByZeroThrows) {
  EXPECT_THROW(divmod(Polynomial{1}, Polynomial{}), std::domain_error);
}

TEST(PolynomialTest, DivideExact) {
  EXPECT_EQ(divide_exact(Polynomial{-1, -99 + 0, 0, 1} * Polynomial{2, 3}, Polynomial{2, 3}),
            Polynomial({-1, -99, 0, 1}));
  EXPECT_THROW(divide_exact(Polynomial{1, 0, 1}, Polynomial{1, 1}), std::domain_error);
  EXPECT_THROW(divide_exact(Polynomial{1, 1}, Polynomial{0, 2}), std::domain_error);
}

TEST(PolynomialTest, GcdHandFactorization) {
  // x^2 - 1 = (x - 1)(x + 1), x^2 - 2x + 1 = (x - 1)^2
  EXPECT_EQ(gcd(Polynomial{-1, 0, 1}, Polynomial{1, -2, 1}), Polynomial({-1, 1}));
}

TEST(PolynomialTest, GcdWithZeroIsNormalizedInput) {
  EXPECT_EQ(gcd(Polynomial{-6, 0, -4}, Polynomial{}), Polynomial({3, 0, 2}));
  EXPECT_EQ(gcd(Polynomial{}, Polynomial{4, -2}), Polynomial({-2, 1}));
}

TEST(PolynomialTest, GcdIsPrimitiveWithPositiveLead) {
  // 6(x - 2)(x + 5) and -4(x - 2)(x - 7)
  Polynomial common{-2, 1};
  Polynomial a = (common * Polynomial{5, 1}).scaled(6);
  Polynomial b = (common * Polynomial{-7, 1}).scaled(-4);
  EXPECT_EQ(gcd(a, b), common);
}

TEST(PolynomialTest, ContentAndPrimitivePart) {
  EXPECT_EQ(content(Polynomial{6, -9, 12}), 3);
  EXPECT_EQ(primitive_part(Polynomial{6, -9, -12}), Polynomial({-2, 3, 4}));
  EXPECT_EQ(content(Polynomial{}), 0);
}

TEST(PolynomialTest, PseudoRemainderMultiplier) {
  Polynomial a{1, 2, 3, 4};
  Polynomial b{1, 0, 2};
  // lc(b)^(3-2+1) * a = q b + prem
  Polynomial prem = pseudo_remainder(a, b);
  auto [q, r] = divmod(a.scaled(4), b);
  EXPECT_EQ(to_rational(prem), r);
}

TEST(PolynomialPropertyTest, RingLaws) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(PolynomialPropertyTest, DivmodReconstructs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * to_rational(b) + r, to_rational(a));
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(PolynomialPropertyTest, GcdDividesBoth) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial common = random_poly(rng, 2, 5);
    Polynomial a = common * random_poly(rng, 3), b = common * random_poly(rng, 3);
    Polynomial g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      EXPECT_TRUE(g.is_zero());
      continue;
    }
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
    if (!common.is_zero()) EXPECT_TRUE(divmod(g, common).second.is_zero());
    EXPECT_EQ(content(g), 1);
    EXPECT_GT(g.leading(), 0);
  }
}

}  // namespace
}  // namespace likepowers
