#include "likepowers/rational_gf.hpp"

#include "likepowers/poly_text.hpp"

#include <stdexcept>

namespace likepowers {

namespace {

Polynomial divide_by_scalar(const Polynomial& p, const Integer& s) {
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    out.push_back(std::move(q));
  }
  return Polynomial(std::move(out));
}

std::string parenthesized(const Polynomial& p) {
  if (p.degree() <= 0 && p.constant_term() >= 0) return likepowers::to_string(p);
  return "(" + likepowers::to_string(p) + ")";
}

}  // namespace

RationalGF::RationalGF(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("generating function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial{1};
    return;
  }
  Polynomial g = likepowers::gcd(num, den);
  if (g.degree() > 0) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  if (den.constant_term() == 0) {
    throw std::domain_error("denominator vanishes at x = 0; no power series expansion");
  }
  Integer c = likepowers::gcd(content(num), content(den));
  if (den.constant_term() < 0) c = -c;
  num_ = divide_by_scalar(num, c);
  den_ = divide_by_scalar(den, c);
}

RationalGF RationalGF::polynomial(Polynomial p) { return RationalGF(std::move(p), Polynomial{1}); }

RationalGF RationalGF::operator-() const { return RationalGF(-num_, den_); }

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.den_ == b.den_) return RationalGF(a.num_ + b.num_, a.den_);
  return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator*(const Integer& s, const RationalGF& a) {
  return RationalGF(a.num_.scaled(s), a.den_);
}

std::string RationalGF::to_string(Orientation orientation) const {
  bool flip = orientation == Orientation::LeadingPositive && den_.leading() < 0;
  const Polynomial n = flip ? -num_ : num_;
  const Polynomial d = flip ? -den_ : den_;
  return parenthesized(n) + "/" + parenthesized(d);
}

}  // namespace likepowers
