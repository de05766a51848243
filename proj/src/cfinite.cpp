#include "likepowers/cfinite.hpp"

#include "likepowers/resultant.hpp"

#include <algorithm>
#include <string>

namespace likepowers {

NonIntegralSeries::NonIntegralSeries(std::size_t index)
    : std::runtime_error("series coefficient " + std::to_string(index) + " is not an integer"),
      index_(index) {}

// ---------------------------------------------------------------------------
// CFiniteSeq and its cursor
// ---------------------------------------------------------------------------

CFiniteSeq::CFiniteSeq(std::vector<Rational> rec, std::vector<Integer> init, std::optional<RationalGF> gf)
    : rec_(std::move(rec)), init_(std::move(init)), gf_(std::move(gf)) {
  if (rec_.empty()) throw std::invalid_argument("recurrence order must be at least 1");
  if (rec_.size() != init_.size()) {
    throw std::invalid_argument("recurrence needs exactly one initial term per coefficient");
  }
  for (auto& c : rec_) c.canonicalize();
}

SeqCursor::SeqCursor(const CFiniteSeq& seq) : denominator_(1), init_(seq.initial()) {
  for (const auto& c : seq.recurrence()) denominator_ = lcm(denominator_, c.get_den());
  scaled_rec_.reserve(seq.order());
  for (const auto& c : seq.recurrence()) {
    scaled_rec_.push_back(Integer(c.get_num() * (denominator_ / c.get_den())));
  }
}

Integer SeqCursor::next() {
  Integer value;
  if (index_ < init_.size()) {
    value = init_[index_];
  } else {
    Integer acc = 0;
    for (std::size_t i = 0; i < scaled_rec_.size(); ++i) acc += scaled_rec_[i] * window_[i];
    if (denominator_ != 1) {
      if (!mpz_divisible_p(acc.get_mpz_t(), denominator_.get_mpz_t())) throw NonIntegralSeries(index_);
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), denominator_.get_mpz_t());
    }
    value = std::move(acc);
  }
  window_.push_front(value);
  if (window_.size() > scaled_rec_.size()) window_.pop_back();
  ++index_;
  return value;
}

RationalGF CFiniteSeq::generating_function() const { return gf_ ? *gf_ : from_recurrence(*this); }

std::vector<Integer> CFiniteSeq::terms(std::size_t count) const {
  std::vector<Integer> out;
  out.reserve(count);
  SeqCursor cursor = stream();
  for (std::size_t i = 0; i < count; ++i) out.push_back(cursor.next());
  return out;
}

bool CFiniteSeq::consistent(std::size_t horizon) const {
  if (!gf_) return true;
  return terms(horizon) == expand(*gf_, horizon);
}

std::string CFiniteSeq::recurrence_string() const {
  std::string out = "s_n =";
  bool first = true;
  for (std::size_t i = 0; i < rec_.size(); ++i) {
    const Rational& c = rec_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      out += c < 0 ? " -" : " ";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + " ";
    out += "s_{n-" + std::to_string(i + 1) + "}";
  }
  if (first) out += " 0";
  return out;
}

// ---------------------------------------------------------------------------
// Generating functions <-> recurrences
// ---------------------------------------------------------------------------

std::vector<Rational> expand_rational(const RationalGF& gf, std::size_t count) {
  const auto& p = gf.num();
  const auto& q = gf.den();
  const Rational q0 = q.constant_term();
  std::vector<Rational> c;
  c.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = p.coeff(n);
    const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(q.degree(), 0L)));
    for (std::size_t i = 1; i <= top; ++i) acc -= q.coeffs()[i] * c[n - i];
    c.push_back(acc / q0);
  }
  return c;
}

std::vector<Integer> expand(const RationalGF& gf, std::size_t count) {
  // q0 c_n = p_n - sum_{i>=1} q_i c_{n-i}
  const auto& p = gf.num();
  const auto& q = gf.den();
  const Integer& q0 = q.coeffs()[0];
  const auto dq = static_cast<std::size_t>(q.degree());
  std::vector<Integer> c;
  c.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Integer acc = p.coeff(n);
    for (std::size_t i = 1; i <= std::min(n, dq); ++i) acc -= q.coeffs()[i] * c[n - i];
    if (q0 != 1) {
      if (!mpz_divisible_p(acc.get_mpz_t(), q0.get_mpz_t())) throw NonIntegralSeries(n);
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), q0.get_mpz_t());
    }
    c.push_back(std::move(acc));
  }
  return c;
}

CFiniteSeq to_recurrence(const RationalGF& gf) {
  const auto& den = gf.den();
  const std::size_t order = static_cast<std::size_t>(std::max({den.degree(), gf.num().degree() + 1, 1L}));
  const Integer& q0 = den.coeffs()[0];
  std::vector<Rational> rec(order);
  for (std::size_t i = 1; i <= order; ++i) {
    rec[i - 1] = Rational(Integer(-den.coeff(i)), q0);
  }
  return CFiniteSeq(std::move(rec), expand(gf, order), gf);
}

RationalGF from_recurrence(const CFiniteSeq& seq) {
  Integer scale = 1;
  for (const auto& c : seq.recurrence()) scale = lcm(scale, c.get_den());
  std::vector<Integer> den{scale};
  for (const auto& c : seq.recurrence()) den.push_back(Integer(-c.get_num() * (scale / c.get_den())));
  Polynomial d(std::move(den));
  Polynomial prefix(seq.initial());
  return RationalGF((d * prefix).truncated(seq.order()), d);
}

// ---------------------------------------------------------------------------
// Closure operations
// ---------------------------------------------------------------------------

CFiniteSeq combine(const CFiniteSeq& a, const CFiniteSeq& b, const Integer& alpha, const Integer& beta) {
  return to_recurrence(alpha * a.generating_function() + beta * b.generating_function());
}

CFiniteSeq shift(const CFiniteSeq& a, std::size_t t) {
  if (t == 0) return a;
  const RationalGF gf = a.generating_function();
  Polynomial head(a.terms(t));
  Polynomial tail = gf.num() - gf.den() * head;
  // Coefficients below x^t cancel by construction.
  std::vector<Integer> lowered;
  if (!tail.is_zero()) lowered.assign(tail.coeffs().begin() + static_cast<long>(t), tail.coeffs().end());
  return to_recurrence(RationalGF(Polynomial(std::move(lowered)), gf.den()));
}

Polynomial characteristic_polynomial(const CFiniteSeq& seq) {
  Integer scale = 1;
  for (const auto& c : seq.recurrence()) scale = lcm(scale, c.get_den());
  const std::size_t d = seq.order();
  std::vector<Integer> coeffs(d + 1);
  coeffs[d] = scale;
  for (std::size_t i = 1; i <= d; ++i) {
    const Rational& c = seq.recurrence()[i - 1];
    coeffs[d - i] = -c.get_num() * (scale / c.get_den());
  }
  return Polynomial(std::move(coeffs));
}

// If the characteristic roots of a are {alpha_i} and of b are {beta_j}, the
// polynomial Res_y(char_a(y), y^e char_b(x/y)) vanishes exactly at the
// products alpha_i beta_j (a zero root of a contributes x^e). Each termwise
// product s_n t_n is a combination of n^k (alpha_i beta_j)^n whose polynomial
// degree stays below the root multiplicity in the resultant, so the
// resultant annihilates the product sequence. Its order D bounds the minimal
// order, and any two sequences of order <= D that agree on 2D terms are
// equal, so fitting on 2D + d + e products yields the true minimal recurrence.
CFiniteSeq hadamard(const CFiniteSeq& a, const CFiniteSeq& b) {
  const Polynomial char_a = characteristic_polynomial(a);
  const Polynomial char_b = characteristic_polynomial(b);
  const std::size_t e = b.order();

  // y^e char_b(x/y) = sum_k b_k x^k y^(e-k)
  std::vector<Polynomial> g(e + 1);
  for (std::size_t k = 0; k <= e; ++k) g[e - k] = Polynomial::monomial(char_b.coeff(k), k);
  const Polynomial annihilator = resultant(lift_to_y(char_a), BiPolynomial(std::move(g)));
  const auto order = static_cast<std::size_t>(annihilator.degree());

  const std::size_t count = 2 * order + a.order() + b.order();
  const auto sa = a.terms(count);
  const auto sb = b.terms(count);
  std::vector<Integer> products(count);
  for (std::size_t i = 0; i < count; ++i) products[i] = sa[i] * sb[i];

  for (std::size_t n = order; n < count; ++n) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= order; ++i) acc += annihilator.coeffs()[i] * products[n - order + i];
    if (acc != 0) throw std::logic_error("hadamard: resultant fails to annihilate the product sequence");
  }

  auto minimal = find_recurrence(products, order);
  if (!minimal) throw std::logic_error("hadamard: no recurrence within the resultant order");
  RationalGF gf = from_recurrence(*minimal);
  return CFiniteSeq(minimal->recurrence(), minimal->initial(), std::move(gf));
}

// ---------------------------------------------------------------------------
// Recurrence discovery
// ---------------------------------------------------------------------------

namespace {

// Solves the overdetermined system rows * c = rhs exactly. Returns a
// solution (free variables set to zero) when the system is consistent.
std::optional<std::vector<Rational>> solve_consistent(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i) {
    if (rows[i][unknowns] != 0) return std::nullopt;
  }
  std::vector<Rational> solution(unknowns);
  for (std::size_t i = 0; i < rank; ++i) solution[pivot_cols[i]] = rows[i][unknowns];
  return solution;
}

}  // namespace

std::optional<CFiniteSeq> find_recurrence(const std::vector<Integer>& prefix, std::size_t max_order) {
  if (prefix.size() < 2 * max_order + 2) {
    throw InsufficientData("need at least " + std::to_string(2 * max_order + 2) + " terms for order " +
                           std::to_string(max_order) + ", got " + std::to_string(prefix.size()));
  }
  if (std::all_of(prefix.begin(), prefix.end(), [](const Integer& v) { return v == 0; })) {
    return CFiniteSeq({Rational(0)}, {Integer(0)});
  }
  for (std::size_t r = 1; r <= max_order; ++r) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(prefix.size() - r);
    for (std::size_t n = r; n < prefix.size(); ++n) {
      std::vector<Rational> row(r + 1);
      for (std::size_t i = 1; i <= r; ++i) row[i - 1] = prefix[n - i];
      row[r] = prefix[n];
      rows.push_back(std::move(row));
    }
    if (auto rec = solve_consistent(std::move(rows), r)) {
      return CFiniteSeq(std::move(*rec), std::vector<Integer>(prefix.begin(), prefix.begin() + static_cast<long>(r)));
    }
  }
  return std::nullopt;
}

}  // namespace likepowers
