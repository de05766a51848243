#pragma once

// Exact scalar types. Every value in the library is exact; nothing is ever
// rounded.

#include <gmpxx.h>

#include <string>

namespace likepowers {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(10); }

inline std::string to_string(const Rational& v) { return v.get_str(10); }

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Parses a base-10 integer with optional leading sign; throws
// std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);

}  // namespace likepowers
