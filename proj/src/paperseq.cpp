#include "likepowers/paperseq.hpp"

#include "likepowers/pte.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace likepowers::paperseq {

namespace {

// x^3 - 99x^2 + 99x - 1
const Polynomial& theorem_den() {
  static const Polynomial den{-1, 99, -99, 1};
  return den;
}

// Runs fn(begin, end) over a partition of [0, count) and concatenates the
// results in range order.
template <class Row, class Fn>
std::vector<Row> partitioned(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) return fn(std::size_t{0}, count);
  std::vector<std::vector<Row>> parts(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&parts, &fn, w, begin, end] { parts[w] = fn(begin, end); });
  }
  for (auto& t : threads) t.join();
  std::vector<Row> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// h_k
// ---------------------------------------------------------------------------

Integer h(std::size_t k) {
  Integer prev = 0;
  Integer cur = 1;
  if (k == 0) return prev;
  for (std::size_t i = 1; i < k; ++i) {
    Integer next = 10 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer PellTable::at(std::size_t k) {
  while (values_.size() <= k) {
    const std::size_t n = values_.size();
    values_.push_back(Integer(10 * values_[n - 1] - values_[n - 2]));
  }
  return values_[k];
}

CFiniteSeq h_sequence() {
  return CFiniteSeq({Rational(10), Rational(-1)}, {Integer(0), Integer(1)});
}

Integer closed_form_h(std::size_t k) {
  const QuadElement plus(5, 2);
  const QuadElement minus(5, -2);
  const QuadElement v = (plus.pow(k) - minus.pow(k)) / QuadElement(0, 4);
  if (!v.is_rational() || v.rational_part().get_den() != 1) {
    throw std::logic_error("closed form for h_" + std::to_string(k) + " is not an integer");
  }
  return v.rational_part().get_num();
}

QuadElement closed_form_h_squared(std::size_t k) {
  const QuadElement v = QuadElement(49, -20).pow(k) + QuadElement(49, 20).pow(k) - QuadElement::rational(2);
  return v / QuadElement::rational(96);
}

QuadElement closed_form_h_product(std::size_t k) {
  const QuadElement v = QuadElement(5, -2) * QuadElement(49, -20).pow(k) +
                        QuadElement(5, 2) * QuadElement(49, 20).pow(k) - QuadElement::rational(10);
  return v / QuadElement::rational(96);
}

ClosedFormReport verify_closed_forms(std::size_t k_max) {
  ClosedFormReport report;
  report.k_max = k_max;
  PellTable table;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Integer hk = table.at(k);
    const Integer hk1 = table.at(k + 1);
    bool h_ok = false;
    try {
      h_ok = closed_form_h(k) == hk;
    } catch (const std::logic_error&) {
    }
    if (!h_ok) report.deviations.push_back({k, "h"});
    if (closed_form_h_squared(k) != QuadElement::rational(Rational(hk * hk))) {
      report.deviations.push_back({k, "h^2"});
    }
    if (closed_form_h_product(k) != QuadElement::rational(Rational(hk1 * hk))) {
      report.deviations.push_back({k, "h_{k+1}h_k"});
    }
  }
  return report;
}

Integer pell_invariant(std::size_t k) {
  const Integer n = h(k);
  const Integer m = h(k + 1);
  return m * m - 10 * m * n + n * n;
}

PellReport verify_pell(std::size_t k_max) {
  PellReport report;
  report.k_max = k_max;
  PellTable table;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Integer n = table.at(k);
    const Integer m = table.at(k + 1);
    Integer v = m * m - 10 * m * n + n * n;
    if (v != 1) report.deviations.push_back({k, std::move(v)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// The eleven sequences
// ---------------------------------------------------------------------------

std::size_t theorem_index(char label) {
  auto it = std::find(kTheoremLabels.begin(), kTheoremLabels.end(), label);
  if (it == kTheoremLabels.end()) throw std::out_of_range(std::string("unknown sequence label '") + label + "'");
  return static_cast<std::size_t>(it - kTheoremLabels.begin());
}

RationalGF theorem_gf(char label) {
  switch (label) {
    case 'a': return {Polynomial{3, 164, 1}, theorem_den()};
    case 'b': return {Polynomial{1, 134, -7}, theorem_den()};
    case 'c': return {Polynomial{-1, 298, -1}, theorem_den()};
    case 'd': return {Polynomial{-7, 228, -5}, theorem_den()};
    case 'e': return {Polynomial{-5, 258, 3}, theorem_den()};
    case 'f': return {Polynomial{-3, 94, -3}, theorem_den()};
    case 'p': return {Polynomial{3, 138, -5}, theorem_den()};
    case 'q': return {Polynomial{1, 244, 3}, theorem_den()};
    case 'r': return {Polynomial{-7, 254, 1}, theorem_den()};
    case 's': return {Polynomial{-5, 148, -7}, theorem_den()};
    case 't': return {Polynomial{3}, Polynomial{1, -1}};
    default: break;
  }
  throw std::out_of_range(std::string("unknown sequence label '") + label + "'");
}

TheoremSequences theorem_sequences_via_gf() {
  TheoremSequences out;
  out.seqs.reserve(kTheoremLabels.size());
  for (char label : kTheoremLabels) out.seqs.push_back(to_recurrence(theorem_gf(label)));
  return out;
}

std::vector<TheoremTuple> theorem_tuples_via_gf(std::size_t k_max) {
  const TheoremSequences seqs = theorem_sequences_via_gf();
  std::vector<SeqCursor> cursors;
  for (const auto& s : seqs.seqs) cursors.push_back(s.stream());
  std::vector<TheoremTuple> out;
  out.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    TheoremTuple t;
    for (std::size_t i = 0; i < cursors.size(); ++i) t.values[i] = cursors[i].next();
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ChernickConstruction> theorem_tuples_via_chernick(std::size_t k_max) {
  // construction label feeding each identity label, in kTheoremLabels order
  static constexpr std::array<char, 11> kSource = {'a', 'b', 'c', 'd', 'e', 'f', 'p', 'q', 's', 't', 'u'};
  PellTable table;
  std::vector<ChernickConstruction> out;
  out.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const pte::ChernickTuple c = pte::chernick(table.at(k + 1), table.at(k));
    const Integer& u = c['u'];
    const Integer lift = 2 * u;
    ChernickConstruction row;
    for (std::size_t i = 0; i < kSource.size(); ++i) row.tuple.values[i] = c[kSource[i]] + lift;
    row.unit_value = c['r'] + lift;
    row.u_prime = u;
    out.push_back(std::move(row));
  }
  return out;
}

Integer identity_lhs(const TheoremTuple& t, unsigned j) {
  Integer total = 0;
  Integer term;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    mpz_pow_ui(term.get_mpz_t(), t.values[i].get_mpz_t(), j);
    if (i < 6) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

TheoremReport verify_theorem(std::size_t k_max, const std::vector<unsigned>& exponents, unsigned workers) {
  TheoremReport report;
  report.k_max = k_max;
  report.exponents = exponents;
  std::sort(report.exponents.begin(), report.exponents.end());
  report.exponents.erase(std::unique(report.exponents.begin(), report.exponents.end()), report.exponents.end());

  const std::vector<TheoremTuple> tuples = theorem_tuples_via_gf(k_max);
  const auto& js = report.exponents;
  report.deviations = partitioned<TheoremDeviation>(tuples.size(), workers, [&](std::size_t begin, std::size_t end) {
    std::vector<TheoremDeviation> rows;
    for (std::size_t k = begin; k < end; ++k) {
      for (unsigned j : js) {
        Integer v = identity_lhs(tuples[k], j);
        if (v != 1) rows.push_back({k, j, std::move(v)});
      }
    }
    return rows;
  });
  report.checks = tuples.size() * js.size();
  return report;
}

// ---------------------------------------------------------------------------
// Ramanujan's triple
// ---------------------------------------------------------------------------

RationalGF ramanujan_gf(char label) {
  static const Polynomial den{1, -82, -82, 1};
  switch (label) {
    case 'a': return {Polynomial{1, 53, 9}, den};
    case 'b': return {Polynomial{2, -26, -12}, den};
    case 'c': return {Polynomial{2, 8, -10}, den};
    default: break;
  }
  throw std::out_of_range(std::string("unknown Ramanujan label '") + label + "'");
}

RamanujanSequences ramanujan_sequences() {
  return {to_recurrence(ramanujan_gf('a')), to_recurrence(ramanujan_gf('b')), to_recurrence(ramanujan_gf('c'))};
}

RamanujanReport verify_ramanujan(std::size_t n_max, unsigned workers) {
  RamanujanReport report;
  report.n_max = n_max;
  const RamanujanSequences seqs = ramanujan_sequences();
  const auto a = seqs.a.terms(n_max + 1);
  const auto b = seqs.b.terms(n_max + 1);
  const auto c = seqs.c.terms(n_max + 1);
  report.deviations = partitioned<RamanujanDeviation>(n_max + 1, workers, [&](std::size_t begin, std::size_t end) {
    std::vector<RamanujanDeviation> rows;
    for (std::size_t n = begin; n < end; ++n) {
      Integer v = a[n] * a[n] * a[n] + b[n] * b[n] * b[n] - c[n] * c[n] * c[n];
      if (v != (n % 2 == 0 ? 1 : -1)) rows.push_back({n, std::move(v)});
    }
    return rows;
  });
  return report;
}

// ---------------------------------------------------------------------------
// Proof objects
// ---------------------------------------------------------------------------

std::vector<HFormCheck> derive_h_forms() {
  const CFiniteSeq hs = h_sequence();
  const CFiniteSeq h1 = hadamard(hs, hs);
  const CFiniteSeq h2 = hadamard(shift(hs, 1), hs);
  const CFiniteSeq h3 = shift(h1, 1);
  const CFiniteSeq two = to_recurrence(RationalGF(Polynomial{2}, Polynomial{1, -1}));

  const CFiniteSeq assembled = combine(combine(h3, h2, -5, 4), combine(h1, two, -3, 1), 1, 1);

  std::vector<HFormCheck> out;
  out.push_back({"H1", RationalGF(Polynomial{0, -1, -1}, theorem_den()), h1.generating_function()});
  out.push_back({"H2", RationalGF(Polynomial{0, -10}, theorem_den()), h2.generating_function()});
  out.push_back({"H3", RationalGF(Polynomial{-1, -1}, theorem_den()), h3.generating_function()});
  out.push_back({"-5H3+4H2-3H1+2/(1-x)", theorem_gf('a'), assembled.generating_function()});
  return out;
}

}  // namespace likepowers::paperseq
