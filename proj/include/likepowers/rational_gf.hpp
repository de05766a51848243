#pragma once

#include "likepowers/polynomial.hpp"

#include <string>

namespace likepowers {

/// Which way round a generating function is printed. Equality never depends
/// on this; it only picks the overall sign of numerator and denominator.
enum class Orientation {
  ConstantPositive,  ///< canonical: den(0) > 0, e.g. (-x^2-164x-3)/(1-99x+99x^2-x^3)
  LeadingPositive,   ///< den's top coefficient > 0, e.g. (x^2+164x+3)/(x^3-99x^2+99x-1)
};

/// A rational generating function num/den with den(0) != 0, kept in
/// canonical form: num and den coprime in Q[x], the combined content of all
/// coefficients equal to 1, and den(0) > 0. Zero is 0/1.
class RationalGF {
 public:
  /// Throws std::domain_error if den is zero or, after cancelling common
  /// factors, has a zero constant term (no power-series expansion).
  RationalGF(Polynomial num, Polynomial den);

  /// p/1
  static RationalGF polynomial(Polynomial p);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalGF operator-() const;
  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator*(const Integer& s, const RationalGF& a);

  bool operator==(const RationalGF& o) const = default;

  std::string to_string(Orientation orientation = Orientation::ConstantPositive) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace likepowers
