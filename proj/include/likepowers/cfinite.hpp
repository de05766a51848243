#pragma once

/**
 * @file cfinite.hpp
 * @brief C-finite sequences: linear recurrences with constant coefficients.
 *
 * A CFiniteSeq of order d stores coefficients c_1..c_d and initial terms
 * s_0..s_{d-1}; every later term is
 *
 *   s_n = c_1 s_{n-1} + ... + c_d s_{n-d}     (n >= d).
 *
 * Trailing coefficients may be zero, which lets a recurrence describe a
 * generating function whose numerator degree reaches the denominator degree.
 * The generating function of such a sequence is rational, and the two
 * descriptions convert into each other losslessly (to_recurrence /
 * from_recurrence).
 */

#include "likepowers/numbers.hpp"
#include "likepowers/polynomial.hpp"
#include "likepowers/rational_gf.hpp"

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

namespace likepowers {

/// Raised when a series coefficient is not an integer.
class NonIntegralSeries : public std::runtime_error {
 public:
  explicit NonIntegralSeries(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Raised when a prefix is too short to both fit and corroborate a recurrence.
class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CFiniteSeq;

/// Pull-based cursor over a sequence. Holds only the last `order` terms.
class SeqCursor {
 public:
  explicit SeqCursor(const CFiniteSeq& seq);

  /// Returns the term at index() and advances.
  Integer next();
  std::size_t index() const { return index_; }

 private:
  std::vector<Integer> scaled_rec_;  // c_i * denominator
  Integer denominator_;
  std::vector<Integer> init_;
  std::deque<Integer> window_;  // most recent term at the front
  std::size_t index_ = 0;
};

class CFiniteSeq {
 public:
  /// Throws std::invalid_argument unless rec and init have the same nonzero
  /// length.
  CFiniteSeq(std::vector<Rational> rec, std::vector<Integer> init,
             std::optional<RationalGF> gf = std::nullopt);

  std::size_t order() const { return rec_.size(); }
  const std::vector<Rational>& recurrence() const { return rec_; }
  const std::vector<Integer>& initial() const { return init_; }

  /// The generating function: the attached one when known, otherwise
  /// rebuilt from the recurrence.
  RationalGF generating_function() const;
  bool has_attached_gf() const { return gf_.has_value(); }

  SeqCursor stream() const { return SeqCursor(*this); }
  std::vector<Integer> terms(std::size_t count) const;

  /// True when streaming the recurrence and expanding the attached
  /// generating function agree on the first `horizon` terms (trivially true
  /// without an attached generating function).
  bool consistent(std::size_t horizon) const;

  /// Human-readable recurrence, e.g. "s_n = 10 s_{n-1} - s_{n-2}".
  std::string recurrence_string() const;

 private:
  std::vector<Rational> rec_;
  std::vector<Integer> init_;
  std::optional<RationalGF> gf_;
};

/// First `count` power-series coefficients of gf. Throws NonIntegralSeries
/// at the first non-integral coefficient.
std::vector<Integer> expand(const RationalGF& gf, std::size_t count);
std::vector<Rational> expand_rational(const RationalGF& gf, std::size_t count);

/// Recurrence read off the denominator; order max(deg den, deg num + 1, 1).
CFiniteSeq to_recurrence(const RationalGF& gf);
RationalGF from_recurrence(const CFiniteSeq& seq);

/// Termwise alpha*a + beta*b.
CFiniteSeq combine(const CFiniteSeq& a, const CFiniteSeq& b, const Integer& alpha, const Integer& beta);

/// Drops the first t terms: (gf - s_0 - ... - s_{t-1} x^{t-1}) / x^t.
CFiniteSeq shift(const CFiniteSeq& a, std::size_t t);

/// Termwise product, returned with its minimal recurrence.
CFiniteSeq hadamard(const CFiniteSeq& a, const CFiniteSeq& b);

/// Characteristic polynomial y^d - c_1 y^{d-1} - ... - c_d scaled to
/// integer coefficients (positive leading coefficient, content 1).
Polynomial characteristic_polynomial(const CFiniteSeq& seq);

/// Smallest-order recurrence (order <= max_order) fitting every term of
/// prefix, or nullopt. Requires prefix.size() >= 2*max_order + 2 and throws
/// InsufficientData otherwise. An all-zero prefix yields order 1, rec [0].
std::optional<CFiniteSeq> find_recurrence(const std::vector<Integer>& prefix, std::size_t max_order);

}  // namespace likepowers
