#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact coefficients.
 *
 * Coefficients are stored in ascending degree order: coeffs()[i] is the
 * coefficient of x^i. The zero polynomial has no coefficients, and a nonzero
 * polynomial never carries trailing zeros, so structural equality is
 * mathematical equality.
 *
 * The coefficient ring is a template parameter. Three instantiations are used:
 *
 *   Polynomial      integer coefficients, the workhorse
 *   RatPolynomial   rational coefficients, for division over Q
 *   BiPolynomial    coefficients that are themselves Polynomials, i.e. Z[x][y],
 *                   the shape the resultant works on
 */

#include "likepowers/numbers.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace likepowers {

template <class T>
class BasicPolynomial {
 public:
  using coefficient_type = T;

  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicPolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicPolynomial constant(T c) { return BasicPolynomial(std::vector<T>{std::move(c)}); }

  /// c * x^k
  static BasicPolynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = std::move(c);
    return BasicPolynomial(std::move(v));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of x^i; zero beyond the stored range.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
  T leading() const { return coeffs_.empty() ? T{} : coeffs_.back(); }
  T constant_term() const { return coeff(0); }

  BasicPolynomial operator-() const {
    BasicPolynomial out = *this;
    for (auto& c : out.coeffs_) c = T(-c);
    return out;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += T(a.coeffs_[i] * b.coeffs_[j]);
      }
    }
    return BasicPolynomial(std::move(out));
  }

  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  /// Multiplies every coefficient by a scalar.
  BasicPolynomial scaled(const T& s) const {
    std::vector<T> out(coeffs_);
    for (auto& c : out) c = T(c * s);
    return BasicPolynomial(std::move(out));
  }

  /// Multiplication by x^k.
  BasicPolynomial shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return BasicPolynomial(std::move(out));
  }

  /// Reduction modulo x^n.
  BasicPolynomial truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    return BasicPolynomial(std::vector<T>(coeffs_.begin(), coeffs_.begin() + n));
  }

  /// The polynomial x^deg * p(1/x); drops the factor of x carried by low zeros.
  BasicPolynomial reversed() const {
    std::vector<T> out(coeffs_.rbegin(), coeffs_.rend());
    return BasicPolynomial(std::move(out));
  }

  T evaluate(const T& at) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = T(acc * at + *it);
    return acc;
  }

  bool operator==(const BasicPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Polynomial = BasicPolynomial<Integer>;
using RatPolynomial = BasicPolynomial<Rational>;
using BiPolynomial = BasicPolynomial<Polynomial>;

RatPolynomial to_rational(const Polynomial& p);

/// gcd of all coefficients (nonnegative; zero for the zero polynomial).
Integer content(const Polynomial& p);

/// p / content(p), with the sign chosen so the leading coefficient is positive.
Polynomial primitive_part(const Polynomial& p);

/// Division with remainder over Q: a = q*b + r, deg r < deg b.
/// Throws std::domain_error when b is zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
std::pair<RatPolynomial, RatPolynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Quotient a / b when it exists in Z[x]; throws std::domain_error otherwise.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving Z[x].
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(p, 0) = primitive_part(p).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace likepowers
