#pragma once

/**
 * @file pte.hpp
 * @brief Prouhet-Tarry-Escott pairs: equal sums of like powers.
 *
 * Two multisets A, B of the same size m solve the problem to degree k when
 *
 *   sum a_i^e = sum b_i^e   for e = 1..k.
 *
 * Distinct multisets can agree for at most e = 1..m-1 (Newton's identities
 * pin down the elementary symmetric functions, hence the multiset, from the
 * first m power sums); a solution reaching k = m-1 is called ideal.
 */

#include "likepowers/numbers.hpp"
#include "likepowers/polynomial.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace likepowers::pte {

/// Integer multiset, kept sorted so multiset equality is list equality.
class IntMultiset {
 public:
  /// Throws std::invalid_argument when empty.
  explicit IntMultiset(std::vector<Integer> values);

  const std::vector<Integer>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  bool operator==(const IntMultiset&) const = default;

  std::string to_string() const;  // "{-4,0,3}"

 private:
  std::vector<Integer> values_;
};

/// Agreement degree of two multisets.
struct DegreeResult {
  enum class Kind { Exact, IdenticalMultisets };

  Kind kind = Kind::Exact;
  /// Power sums agree for e = 1..degree (Exact only; 0 means e = 1 already
  /// differs).
  unsigned degree = 0;
  /// First exponent where the sums differ, and sum(A^e) - sum(B^e) there.
  /// Present for Exact results computed by pte_degree.
  std::optional<unsigned> witness_exponent;
  std::optional<Integer> witness_difference;

  static DegreeResult exact(unsigned k) { return {Kind::Exact, k, std::nullopt, std::nullopt}; }
  static DegreeResult identical() { return {Kind::IdenticalMultisets, 0, std::nullopt, std::nullopt}; }

  bool is_identical() const { return kind == Kind::IdenticalMultisets; }

  /// Compares kind and degree only; witnesses are certificates, not identity.
  bool same_degree(const DegreeResult& o) const { return kind == o.kind && degree == o.degree; }

  std::string to_string() const;  // "Exact(5)" or "IdenticalMultisets"
};

struct PTEPair {
  IntMultiset a;
  IntMultiset b;
  DegreeResult degree;

  std::size_t size() const { return a.size(); }
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer power_sum(const IntMultiset& s, unsigned exponent);

/// Probes e = 1, 2, ... and stops at the first disagreement. probe_limit
/// defaults to the size m, which always suffices for distinct multisets.
/// Throws SizeMismatch if |A| != |B| and std::invalid_argument if
/// probe_limit < m.
DegreeResult pte_degree(const IntMultiset& a, const IntMultiset& b, std::optional<unsigned> probe_limit = std::nullopt);

/// Builds a certified pair.
PTEPair make_pair(IntMultiset a, IntMultiset b);

/// Exact(m - 1); IdenticalMultisets is never ideal.
bool is_ideal(const PTEPair& pair);

/// v -> M v + K on both sides, degree recomputed.
PTEPair affine_transform(const PTEPair& pair, const Integer& scale, const Integer& offset);

struct PolyCriterion {
  Polynomial diff;  ///< prod (z - a_i) - prod (z - b_i)
  DegreeResult implied_degree;
};

/// Degree read from prod(z - a_i) - prod(z - b_i): power sums 1..k agree
/// exactly when the difference has degree <= m - k - 1.
PolyCriterion poly_criterion(const IntMultiset& a, const IntMultiset& b);

/// {a, b, c, a+b+c} against {a+b, a+c, b+c, 0}.
PTEPair euler_family(const Integer& a, const Integer& b, const Integer& c);

/// The twelve quadratic forms of Chernick's size-6 family at (m, n).
struct ChernickTuple {
  Integer m, n;
  // a'..f' then p'..u'
  std::array<Integer, 12> values;

  static constexpr std::array<char, 12> kLabels = {'a', 'b', 'c', 'd', 'e', 'f', 'p', 'q', 'r', 's', 't', 'u'};

  const Integer& operator[](char label) const;
};

ChernickTuple chernick(const Integer& m, const Integer& n);

/// A = {a'..f'}, B = {p'..u'}.
PTEPair chernick_pair(const ChernickTuple& t);

}  // namespace likepowers::pte
