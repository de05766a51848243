#include "likepowers/polynomial.hpp"

namespace likepowers {

RatPolynomial to_rational(const Polynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPolynomial(std::move(out));
}

Integer content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = likepowers::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    out.push_back(std::move(q));
  }
  return Polynomial(std::move(out));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};

  std::vector<Rational> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Rational lead = b.leading();
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational f = rem[k + db] / lead;
    if (f == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * b.coeffs()[i];
    quot[k] = std::move(f);
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

std::pair<RatPolynomial, RatPolynomial> divmod(const Polynomial& a, const Polynomial& b) {
  return divmod(to_rational(a), to_rational(b));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");

  std::vector<Integer> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer& lead = b.leading();
  std::vector<Integer> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * b.coeffs()[i];
    quot[k] = std::move(f);
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw std::domain_error("inexact polynomial division");
  }
  return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial r = a;
  const long db = b.degree();
  const Integer lead = b.leading();
  long steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    Polynomial sub = b.shifted_up(shift).scaled(r.leading());
    r = r.scaled(lead) - sub;
    --steps;
  }
  // Keep the multiplier at exactly lc(b)^(deg a - deg b + 1).
  if (steps > 0) r = r.scaled(likepowers::pow(lead, static_cast<unsigned long>(steps)));
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  Polynomial u = primitive_part(a);
  Polynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u);
}

}  // namespace likepowers
