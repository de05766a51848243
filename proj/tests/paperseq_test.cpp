#include "likepowers/paperseq.hpp"

#include <gtest/gtest.h>

#include "likepowers/pte.hpp"
#include "test_util.hpp"

namespace likepowers::paperseq {
namespace {

using testing::ints;

TEST(HTest, Values) {
  EXPECT_EQ(h(0), 0);
  EXPECT_EQ(h(1), 1);
  EXPECT_EQ(h(2), 10);
  EXPECT_EQ(h(3), 99);
  EXPECT_EQ(h(5), 9701);
  PellTable table;
  EXPECT_EQ(table.at(7), 950599);
  EXPECT_EQ(table.at(3), 99);
  for (std::size_t k = 0; k < 40; ++k) EXPECT_EQ(table.at(k), h(k));
  EXPECT_EQ(h_sequence().terms(6), ints({0, 1, 10, 99, 980, 9701}));
}

TEST(QuadElementTest, FieldArithmetic) {
  QuadElement x(5, 2), y(5, -2);
  EXPECT_EQ(x * y, QuadElement::rational(1));  // 25 - 24
  EXPECT_EQ(x.pow(2), QuadElement(49, 20));
  EXPECT_EQ((x / y) * y, x);
  EXPECT_THROW(x / QuadElement(), std::domain_error);
  EXPECT_EQ(QuadElement(Rational(1, 2), 3).to_string(), "1/2+3*sqrt6");
}

TEST(ClosedFormTest, H) {
  EXPECT_EQ(closed_form_h(0), 0);
  EXPECT_EQ(closed_form_h(1), 1);
  EXPECT_EQ(closed_form_h(4), 980);
}

TEST(ClosedFormTest, Products) {
  EXPECT_EQ(closed_form_h_squared(0), QuadElement::rational(0));
  // (-10 + (5-2r)(49-20r) + (5+2r)(49+20r)) / 96 = (-10 + 490) / 96 * ... = 10
  EXPECT_EQ(closed_form_h_product(1), QuadElement::rational(10));
  EXPECT_EQ(closed_form_h_squared(3), QuadElement::rational(99 * 99));
}

TEST(ClosedFormTest, VerifyFifty) {
  ClosedFormReport r = verify_closed_forms(50);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.k_max, 50u);
}

TEST(PellTest, Invariant) {
  EXPECT_EQ(pell_invariant(0), 1);
  EXPECT_EQ(pell_invariant(1), 1);
  EXPECT_EQ(pell_invariant(20), 1);
  EXPECT_TRUE(verify_pell(300).ok());
}

TEST(TheoremTest, KZeroTuple) {
  auto tuples = theorem_tuples_via_gf(1);
  EXPECT_EQ(std::vector<Integer>(tuples[0].values.begin(), tuples[0].values.end()),
            ints({-3, -1, 1, 7, 5, 3, -3, -1, 7, 5, 3}));
}

TEST(TheoremTest, KOneTuple) {
  auto tuples = theorem_tuples_via_gf(1);
  EXPECT_EQ(std::vector<Integer>(tuples[1].values.begin(), tuples[1].values.end()),
            ints({-461, -233, -199, 465, 237, 203, -435, -343, 439, 347, 3}));
  EXPECT_EQ(tuples[1]['r'], 439);
  EXPECT_THROW(tuples[1]['u'], std::out_of_range);
}

TEST(TheoremTest, IdentityLhs) {
  auto tuples = theorem_tuples_via_gf(1);
  EXPECT_EQ(identity_lhs(tuples[0], 3), 1);  // 468 - 467
  for (unsigned j = 1; j <= 5; ++j) EXPECT_EQ(identity_lhs(tuples[1], j), 1) << j;
  EXPECT_NE(identity_lhs(tuples[1], 6), 1);
}

TEST(TheoremTest, ChernickConstructionAgreesWithGenerating) {
  auto via_gf = theorem_tuples_via_gf(100);
  auto via_c = theorem_tuples_via_chernick(100);
  ASSERT_EQ(via_gf.size(), via_c.size());
  for (std::size_t k = 0; k < via_gf.size(); ++k) {
    EXPECT_EQ(via_gf[k], via_c[k].tuple) << "k = " << k;
    EXPECT_EQ(via_c[k].unit_value, 1);
    EXPECT_EQ(via_c[k].u_prime, 1);
    EXPECT_EQ(via_gf[k]['t'], 3);
  }
}

TEST(TheoremTest, ConstructionIsAnIdealPair) {
  // {a..f} against {p, q, 1, r, s, t} agrees to degree exactly 5; at k = 0
  // the two sides coincide.
  auto rows = theorem_tuples_via_chernick(6);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    const auto& v = row.tuple.values;
    pte::IntMultiset lhs({v[0], v[1], v[2], v[3], v[4], v[5]});
    pte::IntMultiset rhs({v[6], v[7], row.unit_value, v[8], v[9], v[10]});
    EXPECT_EQ(pte::pte_degree(lhs, rhs).to_string(), k == 0 ? "IdenticalMultisets" : "Exact(5)") << k;
  }
}

TEST(TheoremTest, SequencesMatchGeneratingFunctions) {
  TheoremSequences s = theorem_sequences_via_gf();
  for (char label : kTheoremLabels) {
    EXPECT_TRUE(s[label].consistent(60)) << label;
    EXPECT_EQ(s[label].generating_function(), theorem_gf(label));
  }
  EXPECT_EQ(s['t'].terms(5), ints({3, 3, 3, 3, 3}));
  EXPECT_THROW(theorem_gf('z'), std::out_of_range);
}

TEST(TheoremTest, VerifyReportsDeviationsOnlyForSixthPower) {
  TheoremReport ok = verify_theorem(30, {1, 2, 3, 4, 5});
  EXPECT_TRUE(ok.ok());
  EXPECT_EQ(ok.checks, 31u * 5u);

  TheoremReport bad = verify_theorem(1, {6});
  // k = 0 holds for every j: both sides are the same multiset there
  ASSERT_EQ(bad.deviations.size(), 1u);
  EXPECT_EQ(bad.deviations[0].k, 1u);
  EXPECT_EQ(bad.deviations[0].j, 6u);
  EXPECT_EQ(bad.deviations[0].value, identity_lhs(theorem_tuples_via_gf(1)[1], 6));
}

TEST(TheoremTest, WorkersDoNotChangeTheReport) {
  TheoremReport serial = verify_theorem(40, {1, 5, 6, 7});
  for (unsigned w : {2u, 3u, 8u, 64u}) {
    TheoremReport parallel = verify_theorem(40, {7, 6, 5, 1}, w);
    EXPECT_EQ(parallel.deviations, serial.deviations) << w;
    EXPECT_EQ(parallel.checks, serial.checks);
  }
  EXPECT_EQ(serial.deviations.size(), 40u * 2u);  // j = 6, 7 for k = 1..40
}

TEST(RamanujanTest, FirstTerms) {
  RamanujanSequences s = ramanujan_sequences();
  EXPECT_EQ(s.a.terms(2), ints({1, 135}));
  EXPECT_EQ(s.b.terms(2), ints({2, 138}));
  EXPECT_EQ(s.c.terms(2), ints({2, 172}));
  EXPECT_THROW(ramanujan_gf('d'), std::out_of_range);
}

TEST(RamanujanTest, Verify) {
  EXPECT_TRUE(verify_ramanujan(60).ok());
  RamanujanReport p = verify_ramanujan(60, 4);
  EXPECT_TRUE(p.ok());
  EXPECT_EQ(p.n_max, 60u);
}

TEST(HFormsTest, AllPass) {
  auto checks = derive_h_forms();
  ASSERT_EQ(checks.size(), 4u);
  for (const auto& c : checks) EXPECT_TRUE(c.pass()) << c.name << ": " << c.computed.to_string();
}

}  // namespace
}  // namespace likepowers::paperseq
