#pragma once

#include "likepowers/polynomial.hpp"

namespace likepowers {

/// Res_y(f, g) for f, g in Z[x][y], returned as a polynomial in x.
///
/// Computed as the determinant of the Sylvester matrix by fraction-free
/// (Bareiss) elimination over Z[x]; every intermediate division is exact.
/// Throws std::invalid_argument if either input is zero.
Polynomial resultant(const BiPolynomial& f, const BiPolynomial& g);

/// Univariate resultant, the case where every y-coefficient is a constant.
Integer resultant(const Polynomial& f, const Polynomial& g);

/// Lifts a polynomial in y with integer coefficients into Z[x][y].
BiPolynomial lift_to_y(const Polynomial& p);

}  // namespace likepowers
