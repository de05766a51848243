#pragma once

#include "likepowers/polynomial.hpp"

#include <random>
#include <vector>

namespace likepowers::testing {

inline Polynomial random_poly(std::mt19937& rng, int max_degree = 5, int max_coeff = 9) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : c) v = coef(rng);
  return Polynomial(std::move(c));
}

inline std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace likepowers::testing
