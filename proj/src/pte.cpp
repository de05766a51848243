#include "likepowers/pte.hpp"

#include <algorithm>

namespace likepowers::pte {

IntMultiset::IntMultiset(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("multiset must be nonempty");
  std::sort(values_.begin(), values_.end());
}

std::string IntMultiset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += values_[i].get_str();
  }
  return out + "}";
}

std::string DegreeResult::to_string() const {
  if (is_identical()) return "IdenticalMultisets";
  return "Exact(" + std::to_string(degree) + ")";
}

Integer power_sum(const IntMultiset& s, unsigned exponent) {
  Integer total = 0;
  Integer term;
  for (const auto& v : s.values()) {
    mpz_pow_ui(term.get_mpz_t(), v.get_mpz_t(), exponent);
    total += term;
  }
  return total;
}

DegreeResult pte_degree(const IntMultiset& a, const IntMultiset& b, std::optional<unsigned> probe_limit) {
  if (a.size() != b.size()) {
    throw SizeMismatch("multisets of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  const auto m = static_cast<unsigned>(a.size());
  const unsigned limit = probe_limit.value_or(m);
  if (limit < m) throw std::invalid_argument("probe limit below the multiset size");
  if (a == b) return DegreeResult::identical();

  // Distinct multisets disagree at some e <= m, so the loop always returns.
  for (unsigned e = 1; e <= limit; ++e) {
    Integer diff = power_sum(a, e) - power_sum(b, e);
    if (diff != 0) {
      DegreeResult r = DegreeResult::exact(e - 1);
      r.witness_exponent = e;
      r.witness_difference = std::move(diff);
      return r;
    }
  }
  throw std::logic_error("distinct multisets agreed on all power sums up to their size");
}

PTEPair make_pair(IntMultiset a, IntMultiset b) {
  DegreeResult d = pte_degree(a, b);
  return {std::move(a), std::move(b), std::move(d)};
}

bool is_ideal(const PTEPair& pair) {
  return !pair.degree.is_identical() && pair.degree.degree + 1 == pair.size();
}

PTEPair affine_transform(const PTEPair& pair, const Integer& scale, const Integer& offset) {
  auto map = [&](const IntMultiset& s) {
    std::vector<Integer> out;
    out.reserve(s.size());
    for (const auto& v : s.values()) out.push_back(Integer(scale * v + offset));
    return IntMultiset(std::move(out));
  };
  return make_pair(map(pair.a), map(pair.b));
}

namespace {

Polynomial root_product(const IntMultiset& s) {
  Polynomial p{1};
  for (const auto& v : s.values()) p *= Polynomial{Integer(-v), Integer(1)};
  return p;
}

}  // namespace

PolyCriterion poly_criterion(const IntMultiset& a, const IntMultiset& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("multisets of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  Polynomial diff = root_product(a) - root_product(b);
  if (diff.is_zero()) return {std::move(diff), DegreeResult::identical()};
  const auto k = static_cast<unsigned>(static_cast<long>(a.size()) - 1 - diff.degree());
  return {std::move(diff), DegreeResult::exact(k)};
}

PTEPair euler_family(const Integer& a, const Integer& b, const Integer& c) {
  return make_pair(IntMultiset({a, b, c, Integer(a + b + c)}),
                   IntMultiset({Integer(a + b), Integer(a + c), Integer(b + c), Integer(0)}));
}

const Integer& ChernickTuple::operator[](char label) const {
  for (std::size_t i = 0; i < kLabels.size(); ++i) {
    if (kLabels[i] == label) return values[i];
  }
  throw std::out_of_range(std::string("no Chernick label '") + label + "'");
}

ChernickTuple chernick(const Integer& m, const Integer& n) {
  const Integer mm = m * m;
  const Integer mn = m * n;
  const Integer nn = n * n;
  auto form = [&](long x, long y, long z) { return Integer(x * mm + y * mn + z * nn); };
  return {m,
          n,
          {
              form(-5, 4, -3),   // a'
              form(-3, 6, 5),    // b'
              form(-1, -10, -1), // c'
              form(5, -4, 3),    // d'
              form(3, -6, -5),   // e'
              form(1, 10, 1),    // f'
              form(-5, 6, 3),    // p'
              form(-3, -4, -5),  // q'
              form(-1, 10, -1),  // r'
              form(5, -6, -3),   // s'
              form(3, 4, 5),     // t'
              form(1, -10, 1),   // u'
          }};
}

PTEPair chernick_pair(const ChernickTuple& t) {
  std::vector<Integer> a(t.values.begin(), t.values.begin() + 6);
  std::vector<Integer> b(t.values.begin() + 6, t.values.end());
  return make_pair(IntMultiset(std::move(a)), IntMultiset(std::move(b)));
}

}  // namespace likepowers::pte
