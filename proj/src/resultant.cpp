#include "likepowers/resultant.hpp"

#include <stdexcept>
#include <vector>

namespace likepowers {

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

Matrix sylvester(const BiPolynomial& f, const BiPolynomial& g) {
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  Matrix s(size, std::vector<Polynomial>(size));
  // Rows hold coefficients from the highest power of y down.
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f.coeff(m - i);
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g.coeff(n - i);
  }
  return s;
}

Polynomial bareiss_determinant(Matrix a) {
  const std::size_t size = a.size();
  if (size == 0) return Polynomial{1};
  bool negate = false;
  Polynomial prev{1};
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && a[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return {};
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  Polynomial det = a[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace

BiPolynomial lift_to_y(const Polynomial& p) {
  std::vector<Polynomial> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Polynomial::constant(c));
  return BiPolynomial(std::move(out));
}

Polynomial resultant(const BiPolynomial& f, const BiPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  return bareiss_determinant(sylvester(f, g));
}

Integer resultant(const Polynomial& f, const Polynomial& g) {
  return resultant(lift_to_y(f), lift_to_y(g)).constant_term();
}

}  // namespace likepowers
