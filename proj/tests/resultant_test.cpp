#include "likepowers/resultant.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace likepowers {
namespace {

// g(x, y) = x - y
BiPolynomial x_minus_y() { return BiPolynomial{Polynomial{0, 1}, Polynomial{-1}}; }

TEST(ResultantTest, Linear) {
  // Res_y(y - c, x - y) = x - c up to sign
  for (long c : {2L, 3L, -7L}) {
    Polynomial r = resultant(lift_to_y(Polynomial{-c, 1}), x_minus_y());
    EXPECT_TRUE(r == Polynomial({-c, 1}) || r == Polynomial({c, -1})) << to_string(r.coeff(0));
  }
}

TEST(ResultantTest, PairwiseRootProductsOfPellCharacteristic) {
  // Res_y(y^2 - 10y + 1, x^2 - 10xy + y^2): roots are rho^2, 1, 1, rho^-2.
  BiPolynomial g{Polynomial{0, 0, 1}, Polynomial{0, -10}, Polynomial{1}};
  Polynomial r = resultant(lift_to_y(Polynomial{1, -10, 1}), g);
  EXPECT_EQ(r, Polynomial({1, -100, 198, -100, 1}));
  // one factor (x - 1) to spare over the minimal x^3 - 99x^2 + 99x - 1
  EXPECT_EQ(r, Polynomial({-1, 1}) * Polynomial({-1, 99, -99, 1}));
}

TEST(ResultantTest, CommonRootGivesZero) {
  Polynomial f = Polynomial{-1, 1} * Polynomial{2, 1};
  Polynomial g = Polynomial{-1, 1} * Polynomial{5, 0, 1};
  EXPECT_EQ(resultant(f, g), 0);
}

TEST(ResultantTest, ConstantsAndZero) {
  EXPECT_EQ(resultant(Polynomial{3}, Polynomial{1, 1, 1}), 9);  // 3^deg g
  EXPECT_THROW(resultant(Polynomial{}, Polynomial{1, 1}), std::invalid_argument);
}

// Oracle: for monic f = prod (y - r_i), Res(f, g) = prod g(r_i).
TEST(ResultantPropertyTest, MatchesProductOverRoots) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f{1};
    std::vector<Integer> roots(static_cast<std::size_t>(count(rng)));
    for (auto& r : roots) {
      r = root(rng);
      f *= Polynomial{Integer(-r), 1};
    }
    Polynomial g = testing::random_poly(rng, 4);
    if (g.is_zero()) continue;
    Integer expected = 1;
    for (const auto& r : roots) expected *= g.evaluate(r);
    EXPECT_EQ(resultant(f, g), expected);
  }
}

TEST(ResultantPropertyTest, ZeroExactlyWhenGcdNonconstant) {
  std::mt19937 rng(23);
  int with_common = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial common{1};
    while (trial % 2 && common.degree() < 1) common = testing::random_poly(rng, 2);
    Polynomial f = common * testing::random_poly(rng, 3);
    Polynomial g = common * testing::random_poly(rng, 3);
    if (f.degree() < 1 || g.degree() < 1) continue;
    bool shares = gcd(f, g).degree() > 0;
    with_common += shares;
    EXPECT_EQ(resultant(f, g) == 0, shares);
  }
  EXPECT_GT(with_common, 50);
}

}  // namespace
}  // namespace likepowers
