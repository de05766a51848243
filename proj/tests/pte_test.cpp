#include "likepowers/pte.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace likepowers::pte {
namespace {

using testing::ints;

IntMultiset ms(std::initializer_list<long> v) { return IntMultiset(ints(v)); }

// Independent oracle: first exponent where the plain sums of powers differ.
std::optional<unsigned> first_difference(const IntMultiset& a, const IntMultiset& b, unsigned limit) {
  for (unsigned e = 1; e <= limit; ++e) {
    Integer sa = 0, sb = 0;
    for (const auto& v : a.values()) {
      Integer p = 1;
      for (unsigned i = 0; i < e; ++i) p *= v;
      sa += p;
    }
    for (const auto& v : b.values()) {
      Integer p = 1;
      for (unsigned i = 0; i < e; ++i) p *= v;
      sb += p;
    }
    if (sa != sb) return e;
  }
  return std::nullopt;
}

TEST(IntMultisetTest, SortedOnConstruction) {
  EXPECT_EQ(ms({3, -1, 2, -1}).values(), ints({-1, -1, 2, 3}));
  EXPECT_EQ(ms({1, 2}), ms({2, 1}));
  EXPECT_THROW(IntMultiset({}), std::invalid_argument);
}

TEST(PowerSumTest, Examples) {
  EXPECT_EQ(power_sum(ms({1, 21, 36, 56}), 2), 4874);  // 1 + 441 + 1296 + 3136
  EXPECT_EQ(power_sum(ms({2, 18, 39, 55}), 2), 4874);
  EXPECT_EQ(power_sum(ms({0, 0, 0}), 7), 0);
  EXPECT_EQ(power_sum(ms({-461, -233, -199, 465, 237, 203}), 1), 12);
  EXPECT_EQ(power_sum(ms({-435, -343, 439, 347, 3}), 1), 11);
}

TEST(PowerSumTest, HugeInputsStayExact) {
  Integer big = Integer("1" + std::string(199, '7'));
  IntMultiset s({big, Integer(-big)});
  for (unsigned e = 1; e <= 5; ++e) {
    Integer expected = e % 2 ? Integer(0) : Integer(2 * pow(big, e));
    EXPECT_EQ(power_sum(s, e), expected);
  }
}

TEST(PteDegreeTest, SizeFourIdeal) {
  DegreeResult d = pte_degree(ms({1, 21, 36, 56}), ms({2, 18, 39, 55}));
  EXPECT_EQ(d.to_string(), "Exact(3)");
  ASSERT_TRUE(d.witness_exponent);
  EXPECT_EQ(*d.witness_exponent, 4u);
}

TEST(PteDegreeTest, ChernickThreeOne) {
  DegreeResult d = pte_degree(ms({-36, -4, -40, 36, 4, 40}), ms({-24, -44, 20, 24, 44, -20}));
  EXPECT_EQ(d.to_string(), "Exact(5)");
  EXPECT_EQ(*d.witness_difference, Integer(-2477260800L));
}

TEST(PteDegreeTest, IdenticalAndErrors) {
  EXPECT_TRUE(pte_degree(ms({-5, -3, -1, 5, 3, 1}), ms({5, 3, 1, -5, -3, -1})).is_identical());
  EXPECT_THROW(pte_degree(ms({1, 2}), ms({1, 2, 3})), SizeMismatch);
  EXPECT_THROW(pte_degree(ms({1, 2, 3}), ms({0, 2, 4}), 2u), std::invalid_argument);
  EXPECT_EQ(pte_degree(ms({0, 1}), ms({0, 2})).to_string(), "Exact(0)");
}

TEST(IsIdealTest, Examples) {
  EXPECT_TRUE(is_ideal(make_pair(ms({1, 21, 36, 56}), ms({2, 18, 39, 55}))));
  EXPECT_TRUE(is_ideal(chernick_pair(chernick(3, 1))));
  EXPECT_FALSE(is_ideal(chernick_pair(chernick(1, 0))));
  EXPECT_FALSE(is_ideal(euler_family(1, 2, 3)));
}

TEST(AffineTest, PaperTupleFromChernick) {
  ChernickTuple t = chernick(10, 1);
  EXPECT_EQ(t['a'], -463);
  EXPECT_EQ(t['u'], 1);
  PTEPair moved = affine_transform(chernick_pair(t), 1, Integer(2 * t['u']));
  EXPECT_EQ(moved.a.values().front(), -461);
  EXPECT_EQ(moved.degree.to_string(), "Exact(5)");
}

TEST(AffineTest, IdentityMap) {
  PTEPair p = euler_family(1, 2, 3);
  PTEPair q = affine_transform(p, 1, 0);
  EXPECT_EQ(q.a, p.a);
  EXPECT_EQ(q.b, p.b);
  EXPECT_TRUE(q.degree.same_degree(p.degree));
}

TEST(AffineTest, EulerScaledAndShifted) {
  PTEPair p = euler_family(1, 2, 3);
  EXPECT_EQ(p.a, ms({1, 2, 3, 6}));
  EXPECT_EQ(p.b, ms({3, 4, 5, 0}));
  PTEPair q = affine_transform(p, 2, 7);
  EXPECT_EQ(q.a, ms({9, 11, 13, 19}));
  EXPECT_EQ(q.b, ms({13, 15, 17, 7}));
  EXPECT_EQ(q.degree.to_string(), "Exact(2)");
}

TEST(PolyCriterionTest, Examples) {
  PolyCriterion c = poly_criterion(ms({-36, -4, -40, 36, 4, 40}), ms({-24, -44, 20, 24, 44, -20}));
  EXPECT_EQ(c.diff, Polynomial{412876800});
  EXPECT_EQ(c.implied_degree.to_string(), "Exact(5)");

  PolyCriterion same = poly_criterion(ms({1, 2, 3}), ms({3, 2, 1}));
  EXPECT_TRUE(same.diff.is_zero());
  EXPECT_TRUE(same.implied_degree.is_identical());

  PolyCriterion small = poly_criterion(ms({0, 3}), ms({1, 2}));
  EXPECT_EQ(small.diff, Polynomial{-2});
  EXPECT_EQ(small.implied_degree.to_string(), "Exact(1)");
}

TEST(EulerFamilyTest, Examples) {
  EXPECT_EQ(euler_family(1, 2, 3).degree.to_string(), "Exact(2)");
  EXPECT_TRUE(euler_family(0, 0, 0).degree.is_identical());
  PTEPair p = euler_family(1, 1, -2);
  EXPECT_EQ(p.a, ms({1, 1, -2, 0}));
  EXPECT_EQ(p.b, ms({2, -1, -1, 0}));
  EXPECT_EQ(p.degree.to_string(), "Exact(2)");
}

TEST(ChernickTest, Examples) {
  const ChernickTuple unit = chernick(1, 0);
  EXPECT_EQ(std::vector<Integer>(unit.values.begin(), unit.values.end()),
            ints({-5, -3, -1, 5, 3, 1, -5, -3, -1, 5, 3, 1}));
  ChernickTuple t = chernick(3, 1);
  EXPECT_EQ(std::vector<Integer>(t.values.begin(), t.values.end()),
            ints({-36, -4, -40, 36, 4, 40, -24, -44, 20, 24, 44, -20}));
  EXPECT_EQ(chernick_pair(t).degree.to_string(), "Exact(5)");
  // Degenerate parameters collapse both sides.
  for (auto [m, n] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 1}}) {
    EXPECT_TRUE(chernick_pair(chernick(m, n)).degree.is_identical()) << m << "," << n;
  }
  EXPECT_THROW(t['z'], std::out_of_range);
}

TEST(PtePropertyTest, DegreeAgreesWithOracleAndCriterion) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> mn(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    ChernickTuple t = chernick(mn(rng), mn(rng));
    PTEPair p = chernick_pair(t);
    PolyCriterion c = poly_criterion(p.a, p.b);
    EXPECT_TRUE(c.implied_degree.same_degree(p.degree));
    if (!p.degree.is_identical()) {
      EXPECT_GE(p.degree.degree, 5u);
      EXPECT_EQ(c.diff.degree(), 0);
      EXPECT_EQ(first_difference(p.a, p.b, 6), p.degree.degree + 1);
    }
    // closed under negation on each side
    for (const IntMultiset* side : {&p.a, &p.b}) {
      std::vector<Integer> neg;
      for (const auto& v : side->values()) neg.push_back(Integer(-v));
      EXPECT_EQ(IntMultiset(neg), *side);
      EXPECT_EQ(power_sum(*side, 1), 0);
      EXPECT_EQ(power_sum(*side, 3), 0);
      EXPECT_EQ(power_sum(*side, 5), 0);
    }
    EXPECT_EQ(t['r'], -t['u']);
  }
  std::uniform_int_distribution<int> abc(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    PTEPair p = euler_family(abc(rng), abc(rng), abc(rng));
    PolyCriterion c = poly_criterion(p.a, p.b);
    EXPECT_TRUE(c.implied_degree.same_degree(p.degree));
    if (!p.degree.is_identical()) {
      EXPECT_GE(p.degree.degree, 2u);
      EXPECT_EQ(first_difference(p.a, p.b, 4), p.degree.degree + 1);
    }
  }
}

TEST(PtePropertyTest, AffineInvariance) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> mn(-20, 20);
  std::uniform_int_distribution<int> scale(-9, 9);
  std::uniform_int_distribution<int> offset(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    PTEPair p = trial % 2 ? chernick_pair(chernick(mn(rng), mn(rng))) : euler_family(mn(rng), mn(rng), mn(rng));
    int m = 0;
    while (m == 0) m = scale(rng);
    PTEPair q = affine_transform(p, m, offset(rng));
    EXPECT_TRUE(q.degree.same_degree(p.degree)) << p.degree.to_string() << " vs " << q.degree.to_string();
  }
}

}  // namespace
}  // namespace likepowers::pte
