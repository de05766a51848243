#pragma once

/**
 * @file paperseq.hpp
 * @brief The concrete sequences: h_k, the eleven-sequence identity, and
 *        Ramanujan's cubic triple.
 *
 * h_0 = 0, h_1 = 1, h_k = 10 h_{k-1} - h_{k-2}. Setting (m, n) =
 * (h_{k+1}, h_k) in Chernick's family makes u' = m^2 - 10mn + n^2 = 1 for
 * every k, and shifting all twelve values by +2u' gives eleven integer
 * sequences with
 *
 *   a^j + b^j + c^j + d^j + e^j + f^j - p^j - q^j - r^j - s^j - t^j = 1
 *
 * for j = 1..5. Each sequence has a rational generating function over
 * x^3 - 99x^2 + 99x - 1 (or 1 - x for t).
 *
 * The construction side and the identity side label the values differently:
 *
 *   identity label   a  b  c  d  e  f  p  q  r  s  t   (and the literal 1)
 *   construction     a  b  c  d  e  f  p  q  s  t  u   (r, constantly 1)
 *
 * each construction value being v' + 2u'.
 */

#include "likepowers/cfinite.hpp"
#include "likepowers/numbers.hpp"
#include "likepowers/quad.hpp"
#include "likepowers/rational_gf.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace likepowers::paperseq {

// --- h_k -------------------------------------------------------------------

Integer h(std::size_t k);

/// Memoized h_k; extends its table on demand.
class PellTable {
 public:
  Integer at(std::size_t k);

 private:
  std::vector<Integer> values_{0, 1};
};

/// The h-sequence as a CFiniteSeq: rec [10, -1], init [0, 1].
CFiniteSeq h_sequence();

/// ((5+2r)^k - (5-2r)^k) / (4r), r = sqrt 6, evaluated in Q(sqrt 6).
/// Throws std::logic_error if the value is not an integer.
Integer closed_form_h(std::size_t k);
/// (-2 + (49-20r)^k + (49+20r)^k) / 96
QuadElement closed_form_h_squared(std::size_t k);
/// (-10 + (5-2r)(49-20r)^k + (5+2r)(49+20r)^k) / 96
QuadElement closed_form_h_product(std::size_t k);

struct ClosedFormDeviation {
  std::size_t k;
  std::string form;  // "h", "h^2" or "h_{k+1}h_k"
  bool operator==(const ClosedFormDeviation&) const = default;
};

struct ClosedFormReport {
  std::size_t k_max = 0;
  std::vector<ClosedFormDeviation> deviations;
  bool ok() const { return deviations.empty(); }
};

ClosedFormReport verify_closed_forms(std::size_t k_max);

/// h_{k+1}^2 - 10 h_{k+1} h_k + h_k^2
Integer pell_invariant(std::size_t k);

struct PellDeviation {
  std::size_t k;
  Integer value;
  bool operator==(const PellDeviation&) const = default;
};

struct PellReport {
  std::size_t k_max = 0;
  std::vector<PellDeviation> deviations;
  bool ok() const { return deviations.empty(); }
};

PellReport verify_pell(std::size_t k_max);

// --- The eleven sequences ----------------------------------------------------

inline constexpr std::array<char, 11> kTheoremLabels = {'a', 'b', 'c', 'd', 'e', 'f', 'p', 'q', 'r', 's', 't'};

/// Index into kTheoremLabels; throws std::out_of_range for unknown labels.
std::size_t theorem_index(char label);

/// Generating function for a Theorem label, as printed alongside the
/// identity (denominator x^3 - 99x^2 + 99x - 1).
RationalGF theorem_gf(char label);

struct TheoremTuple {
  std::array<Integer, 11> values;

  const Integer& operator[](char label) const { return values[theorem_index(label)]; }
  bool operator==(const TheoremTuple&) const = default;
};

struct TheoremSequences {
  std::vector<CFiniteSeq> seqs;  // in kTheoremLabels order

  const CFiniteSeq& operator[](char label) const { return seqs[theorem_index(label)]; }
};

TheoremSequences theorem_sequences_via_gf();

/// Tuples for k = 0..k_max streamed from the generating functions.
std::vector<TheoremTuple> theorem_tuples_via_gf(std::size_t k_max);

struct ChernickConstruction {
  TheoremTuple tuple;
  /// r' + 2u', the value that becomes the literal 1 in the identity.
  Integer unit_value;
  /// u' itself, the Pell invariant at k.
  Integer u_prime;
};

/// Tuples for k = 0..k_max from chernick(h_{k+1}, h_k) shifted by 2u'.
std::vector<ChernickConstruction> theorem_tuples_via_chernick(std::size_t k_max);

/// sum_{a..f} v^j - sum_{p..t} v^j
Integer identity_lhs(const TheoremTuple& t, unsigned j);

struct TheoremDeviation {
  std::size_t k;
  unsigned j;
  Integer value;
  bool operator==(const TheoremDeviation&) const = default;
};

struct TheoremReport {
  std::size_t k_max = 0;
  std::vector<unsigned> exponents;
  std::size_t checks = 0;
  std::vector<TheoremDeviation> deviations;  // sorted by (k, j)
  bool ok() const { return deviations.empty(); }
};

/// Checks the identity for every k <= k_max and j in exponents. The
/// k-range is split across `workers` threads; the report does not depend on
/// the worker count.
TheoremReport verify_theorem(std::size_t k_max, const std::vector<unsigned>& exponents, unsigned workers = 1);

// --- Ramanujan's triple --------------------------------------------------------

/// 'a', 'b' or 'c' over 1 - 82x - 82x^2 + x^3.
RationalGF ramanujan_gf(char label);

struct RamanujanSequences {
  CFiniteSeq a, b, c;
};

RamanujanSequences ramanujan_sequences();

struct RamanujanDeviation {
  std::size_t n;
  Integer value;  // a^3 + b^3 - c^3
  bool operator==(const RamanujanDeviation&) const = default;
};

struct RamanujanReport {
  std::size_t n_max = 0;
  std::vector<RamanujanDeviation> deviations;
  bool ok() const { return deviations.empty(); }
};

/// Checks a_n^3 + b_n^3 - c_n^3 = (-1)^n for n <= n_max.
RamanujanReport verify_ramanujan(std::size_t n_max, unsigned workers = 1);

// --- Proof objects -----------------------------------------------------------

struct HFormCheck {
  std::string name;
  RationalGF expected;
  RationalGF computed;
  bool pass() const { return expected == computed; }
};

/// H1 = sum h_k^2 x^k, H2 = sum h_{k+1} h_k x^k, H3 = sum h_{k+1}^2 x^k by
/// Hadamard products and shifts, then the assembly -5H3 + 4H2 - 3H1 + 2/(1-x)
/// against the a-generating function.
std::vector<HFormCheck> derive_h_forms();

}  // namespace likepowers::paperseq
