#include "fano/bundles.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fano;

TEST(ChernCharacter, Examples) {
  auto x22 = validate(1, 22);
  // F on X_22 with c1 = -H, c2 = 7L
  EXPECT_EQ(ch_of({x22, -1, 7, 0}), CycleClass(x22, 2, -1, 4, Rational(-1, 6)));
  auto y3 = validate(2, 3);
  EXPECT_EQ(ch_of({y3, 0, 2, 0}), CycleClass(y3, 2, 0, -2, 0));
  EXPECT_EQ(ch_of({y3, 0, 0, 0}), CycleClass(y3, 2, 0, 0, 0));
}

TEST(ChernCharacter, AdditiveOnLineBundleSums) {
  // O(aH) + O(bH): c1 = (a+b)H, c2 = ab H^2 = ab d L
  for (const auto& f : all_descriptors())
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        RankTwoBundle e{f, a + b, Integer(a * b * f.degree()), 0};
        EXPECT_EQ(ch_of(e), exp_hyperplane(f, a) + exp_hyperplane(f, b));
      }
}

TEST(Dualize, MatchesDualOnCh) {
  for (int trial = 0; trial < 40; ++trial) {
    auto f = all_descriptors()[static_cast<std::size_t>(oracle::uniform(0, 16))];
    RankTwoBundle e{f, oracle::uniform(-4, 4), oracle::uniform(-8, 8), oracle::uniform(-3, 3)};
    EXPECT_EQ(ch_of(dualize(e)), dual(ch_of(e)));
    EXPECT_EQ(dualize(dualize(e)), e);
  }
}

TEST(Twist, Examples) {
  auto y3 = validate(2, 3);
  // E*(1) for an instanton of charge 2: c1 = 2H, c2 = 3 + 2 = 5L
  auto t = twist(RankTwoBundle{y3, 0, 2, 0}, 1);
  EXPECT_EQ(t.c1, 2);
  EXPECT_EQ(t.c2, 5);
  EXPECT_EQ(t.c3, 0);
}

TEST(Twist, ChIsMultipliedByExpH) {
  for (int trial = 0; trial < 60; ++trial) {
    auto f = all_descriptors()[static_cast<std::size_t>(oracle::uniform(0, 16))];
    RankTwoBundle e{f, oracle::uniform(-3, 3), oracle::uniform(-6, 6), 0};
    const Integer m = oracle::uniform(-3, 3);
    auto t = twist(e, m);
    EXPECT_EQ(ch_of(t), ch_of(e) * exp_hyperplane(f, Rational(m)));
    EXPECT_EQ(twist(t, -m), e);
  }
}

TEST(Numerology, IndexOneExamples) {
  auto n = numerology_index1(3, 0);
  EXPECT_EQ(n.chi, 6);
  EXPECT_EQ(n.degree, 4);
  EXPECT_EQ(numerology_index1(1, 0).chi, 4);

  auto m = numerology_index1(5, 2);
  EXPECT_EQ(m.chi, 6);
  EXPECT_EQ(m.degree, 4);
  EXPECT_EQ(m.closed_form_degree, 12);
  EXPECT_TRUE(m.discrepancy);
}

TEST(Numerology, IndexTwoExamples) {
  auto n = numerology_index2(3, 2);
  EXPECT_EQ(n.chi, 6);
  EXPECT_EQ(n.degree, 4);
  EXPECT_EQ(numerology_index2(5, 4).chi, 6);
  EXPECT_EQ(numerology_index2(5, 4).degree, 4);
  EXPECT_EQ(numerology_index2(4, 0).chi, 12);
  EXPECT_EQ(numerology_index2(4, 0).degree, 16);
}

TEST(Numerology, Sweeps) {
  for (int d = 1; d <= 5; ++d)
    for (int s = 0; s <= 5; ++s) {
      auto one = numerology_index1(d, s);
      EXPECT_EQ(one.chi, d + 3 - s);
      EXPECT_EQ(one.degree, 2 * d - 2 - 2 * s);
      EXPECT_EQ(one.closed_form_degree, 2 * d - 2 + 2 * s);
      EXPECT_EQ(one.discrepancy, s != 0);
      auto two = numerology_index2(d, s);
      EXPECT_EQ(two.chi, 2 * d - 2 * s + 4);
      EXPECT_EQ(two.degree, 4 * d - 4 * s);
    }
}

TEST(Numerology, Errors) {
  EXPECT_THROW(numerology_index1(0, 0), ValidationError);
  EXPECT_THROW(numerology_index1(6, 0), ValidationError);
  EXPECT_THROW(numerology_index1(3, -1), ValidationError);
  EXPECT_THROW(numerology_index2(3, -1), ValidationError);
}

TEST(Coincidence, UnderTheCondition) {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 6; ++k) {
      const int t = 2 * k - d - 1;
      if (t < 0) continue;
      auto rep = coincidence_check(d, k, t);
      EXPECT_TRUE(rep.condition_holds);
      EXPECT_TRUE(rep.dimensions_coincide) << d << " " << k << " " << t;
      EXPECT_TRUE(rep.degrees_coincide) << d << " " << k << " " << t;
    }
}

TEST(Coincidence, DocumentedCase) {
  auto rep = coincidence_check(5, 4, 2);
  EXPECT_EQ(rep.dim_index1, 6);
  EXPECT_EQ(rep.dim_index2, 6);
  EXPECT_EQ(rep.degree_index1, 4);
  EXPECT_EQ(rep.degree_index2, 4);
  EXPECT_EQ(rep.degree_index1_closed_form, 12);
  EXPECT_FALSE(rep.closed_form_degrees_coincide);

  auto off = coincidence_check(3, 3, 0);
  EXPECT_FALSE(off.condition_holds);
  EXPECT_FALSE(off.dimensions_coincide);
  EXPECT_FALSE(off.degrees_coincide);
}
