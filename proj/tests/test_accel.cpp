#include <gtest/gtest.h>

#include "klima/accel.hpp"
#include "klima/search_state.hpp"
#include "support/oracle.hpp"

using namespace klima;

TEST(Compile, CellEncoding) {
  // (x1 ∨ ¬x3) ∧ (x2)
  const CnfFormula f(3, {{{0, false}, {2, true}}, {{1, false}}});
  const AcceleratorImage img = compile(f);
  EXPECT_EQ(img.cell(0, 0), TernaryCell::Zero);
  EXPECT_EQ(img.cell(0, 1), TernaryCell::Wild);
  EXPECT_EQ(img.cell(0, 2), TernaryCell::One);
  EXPECT_EQ(img.cell(1, 1), TernaryCell::Zero);
  EXPECT_EQ(img.signed_membership(0, 2), -1);
  EXPECT_EQ(img.membership.sum(), 3);
  EXPECT_TRUE((img.positive + img.negative == img.membership));
  EXPECT_EQ(img.max_occurrence(), 1);
  EXPECT_EQ(img.order, 2);
}

TEST(Datapath, HandWorkedExample) {
  // (x1 ∨ x2) ∧ (¬x1 ∨ x3) ∧ (¬x2 ∨ ¬x3), x = 000:
  // δ = (0, 1, 2); MLm = (1,0,0); MLb = (0,1,0).
  const CnfFormula f(3, {{{0, false}, {1, false}}, {{0, true}, {2, false}}, {{1, true}, {2, true}}});
  const AcceleratorImage img = compile(f);
  const Assignment x{0, 0, 0};
  const MlVector ml = match_distances(img, x);
  EXPECT_EQ(ml, (MlVector(3) << 0, 1, 2).finished());
  EXPECT_EQ(violated_mask(ml), (Mask(3) << 1, 0, 0).finished());
  EXPECT_EQ(single_sat_mask(ml), (Mask(3) << 0, 1, 0).finished());
  const auto g = gradients(img, x);
  EXPECT_EQ(g.make, (Vector<int>(3) << 1, 1, 0).finished());
  EXPECT_EQ(g.brk, (Vector<int>(3) << 1, 0, 0).finished());
  EXPECT_EQ(g.gain, (Vector<int>(3) << 0, 1, 0).finished());
}

TEST(Datapath, ThresholdsConfigurable) {
  const MlVector ml = (MlVector(4) << 0, 1, 2, 3).finished();
  EXPECT_EQ(single_sat_mask(ml, {1, 4}), (Mask(4) << 0, 0, 1, 1).finished());
  EXPECT_EQ(violated_mask(ml, 2), (Mask(4) << 1, 1, 0, 0).finished());
  EXPECT_THROW(single_sat_mask(ml, {2, 2}), std::invalid_argument);
}

TEST(Datapath, ShapeChecks) {
  const CnfFormula f(2, {{{0, false}}});
  const AcceleratorImage img = compile(f);
  EXPECT_THROW(make_values(img, Mask::Zero(2)), std::invalid_argument);
  EXPECT_THROW(break_values(img, Mask::Zero(1), Assignment(3)), std::invalid_argument);
}

// Distance equals the number of satisfied literals; make/break/gain equal
// the brute-force effect of every single flip.
TEST(Datapath, MatchesFlipEnumeration) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int v = 2 + static_cast<int>(s % 14);
    const CnfFormula f = oracle::random_mixed_formula(s, v, 1 + static_cast<int>(s % 60), 1, 5);
    const Assignment x = oracle::random_assignment(~s, v);
    const AcceleratorImage img = compile(f);
    const MlVector ml = match_distances(img, x);
    for (int i = 0; i < f.num_clauses(); ++i) {
      int sat = 0;
      for (const Literal& l : f.clause(i)) sat += l.holds(x[static_cast<std::size_t>(l.var)]);
      ASSERT_EQ(ml(i), sat);
    }
    const auto g = gradients(img, x);
    const auto ref = oracle::enumerate_flips(f, x);
    for (int j = 0; j < v; ++j) {
      ASSERT_EQ(g.make(j), ref.make[static_cast<std::size_t>(j)]) << s << " var " << j;
      ASSERT_EQ(g.brk(j), ref.brk[static_cast<std::size_t>(j)]) << s << " var " << j;
      ASSERT_EQ(g.gain(j), ref.make[static_cast<std::size_t>(j)] - ref.brk[static_cast<std::size_t>(j)]);
    }
  }
}

TEST(Datapath, FloatingPointScalarAgrees) {
  const CnfFormula f = oracle::random_mixed_formula(77, 10, 40, 2, 4);
  const Assignment x = oracle::random_assignment(78, 10);
  const AcceleratorImage img = compile(f);
  const auto gi = gradients<int>(img, x);
  const auto gd = gradients<double>(img, x);
  EXPECT_TRUE(gd.gain.isApprox(gi.gain.cast<double>()));
}

TEST(SearchState, TracksDenseModelAcrossRandomFlips) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int v = 3 + static_cast<int>(s % 12);
    const CnfFormula f = oracle::random_mixed_formula(s * 31 + 1, v, 5 + static_cast<int>(s % 50), 1, 5);
    const ClauseIndex index(f);
    Assignment x = oracle::random_assignment(s, v);
    SearchState st(index, x);
    const AcceleratorImage img = compile(f);
    Rng rng(s);
    for (int step = 0; step < 60; ++step) {
      const auto g = gradients(img, x);
      const MlVector ml = match_distances(img, x);
      long long sum_delta = 0, viol_slots = 0, single_slots = 0;
      int singles = 0;
      for (int i = 0; i < f.num_clauses(); ++i) {
        ASSERT_EQ(st.distance(i), ml(i));
        sum_delta += ml(i);
        const int len = static_cast<int>(f.clause(i).size());
        if (ml(i) == 0) viol_slots += len;
        if (ml(i) == 1) {
          single_slots += len;
          ++singles;
        }
      }
      for (int j = 0; j < v; ++j) {
        ASSERT_EQ(st.make(j), g.make(j));
        ASSERT_EQ(st.breaks(j), g.brk(j));
      }
      ASSERT_EQ(st.num_unsat(), violated_mask(ml).cast<int>().sum());
      ASSERT_EQ(st.satisfied_literals(), sum_delta);
      ASSERT_EQ(st.violated_slots(), viol_slots);
      ASSERT_EQ(st.single_sat_slots(), single_slots);
      ASSERT_EQ(st.num_single_sat(), singles);
      ASSERT_EQ(st.assignment(), x);

      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
      st.flip(j);
      x[static_cast<std::size_t>(j)] ^= 1;
    }
  }
}

TEST(ClauseIndex, OccurrenceLists) {
  const CnfFormula f(3, {{{0, false}, {1, true}}, {{1, false}, {2, false}}, {{1, true}}});
  const ClauseIndex idx(f);
  EXPECT_EQ(idx.total_literals(), 5);
  EXPECT_EQ(idx.max_occurrence(), 3);
  EXPECT_EQ(idx.clause_length(1), 2);
  const auto occ = idx.occurrences(1);
  ASSERT_EQ(occ.size(), 3u);
  EXPECT_EQ(occ[0].clause, 0);
  EXPECT_TRUE(occ[0].negated);
  EXPECT_FALSE(occ[1].negated);
}
