#pragma once

// Exhaustive search for small Prouhet-Tarry-Escott solutions. Every subset of
// {0..bound} of the requested size is keyed by its exact power-sum signature
// (p_1, ..., p_k); subsets sharing a signature pair up into solutions.

#include "likepowers/pte.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace likepowers::search {

struct SearchSpec {
  unsigned size = 4;
  unsigned bound = 56;
  unsigned target_degree = 3;
  /// Draw multisets with repeated values instead of plain subsets.
  bool allow_repeats = false;
  /// Translate each pair so its smallest element is 0, then deduplicate.
  bool translate_to_zero = false;
  unsigned workers = 1;
};

inline constexpr unsigned kMaxSize = 5;
inline constexpr unsigned kMaxBound = 100;

class GuardrailViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws GuardrailViolation unless 1 <= size <= 5, bound <= 100,
/// 1 <= target_degree < size.
void validate(const SearchSpec& spec);

/// All pairs with matching power sums for e = 1..target_degree, each side
/// sorted, A < B lexicographically, the list sorted and duplicate-free. Every
/// pair is re-certified with pte_degree (std::logic_error if one fails).
std::vector<pte::PTEPair> find_ideal(const SearchSpec& spec);

}  // namespace likepowers::search
