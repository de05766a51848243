#pragma once

// Text form of polynomials and generating functions used across the CLI.
//
// A polynomial is written either as an ascending coefficient list ("3,164,1")
// or as an expression in x ("x^2+164x+3", "-x^3 + 99*x^2 - 1"). A generating
// function is "NUM/DEN", each side optionally parenthesized; a bare
// polynomial means DEN = 1.

#include "likepowers/polynomial.hpp"
#include "likepowers/rational_gf.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace likepowers {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Polynomial parse_polynomial(std::string_view text);
RationalGF parse_gf(std::string_view text);

/// Descending expression form, e.g. "x^2+164x+3"; "0" for zero.
/// parse_polynomial(to_string(p)) == p.
std::string to_string(const Polynomial& p);

/// Ascending comma-separated coefficients, e.g. "3,164,1"; "0" for zero.
std::string to_coefficient_list(const Polynomial& p);

}  // namespace likepowers
