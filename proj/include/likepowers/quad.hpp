#pragma once

#include "likepowers/numbers.hpp"

#include <stdexcept>
#include <string>

namespace likepowers {

/// a + b*sqrt(6) with exact rational parts.
class QuadElement {
 public:
  QuadElement() = default;
  QuadElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  static QuadElement rational(Rational a) { return {std::move(a), Rational(0)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt6_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  /// a^2 - 6 b^2
  Rational norm() const { return a_ * a_ - 6 * b_ * b_; }
  QuadElement conjugate() const { return {a_, Rational(-b_)}; }

  friend QuadElement operator+(const QuadElement& x, const QuadElement& y) {
    return {Rational(x.a_ + y.a_), Rational(x.b_ + y.b_)};
  }
  friend QuadElement operator-(const QuadElement& x, const QuadElement& y) {
    return {Rational(x.a_ - y.a_), Rational(x.b_ - y.b_)};
  }
  friend QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    return {Rational(x.a_ * y.a_ + 6 * x.b_ * y.b_), Rational(x.a_ * y.b_ + y.a_ * x.b_)};
  }
  /// Throws std::domain_error on division by zero.
  friend QuadElement operator/(const QuadElement& x, const QuadElement& y) {
    const Rational n = y.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt 6)");
    QuadElement t = x * y.conjugate();
    return {Rational(t.a_ / n), Rational(t.b_ / n)};
  }

  QuadElement pow(unsigned long k) const {
    QuadElement result = rational(Rational(1));
    QuadElement base = *this;
    while (k) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  bool operator==(const QuadElement& o) const { return a_ == o.a_ && b_ == o.b_; }

  std::string to_string() const { return a_.get_str() + (b_ < 0 ? "-" : "+") + Rational(abs(b_)).get_str() + "*sqrt6"; }

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace likepowers
