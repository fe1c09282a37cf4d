#include <gtest/gtest.h>

#include "gen.hpp"
#include "ncshift/free_algebra.hpp"
#include "ncshift/series.hpp"

using namespace ncshift;

TEST(FreeElement, ZeroCoefficientsAreDropped) {
  NCElement x = NCElement::word({1, 2}, ParamPoly(0));
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x.degree(), -1);
  NCElement y = S(1) - S(1);
  EXPECT_TRUE(y.is_zero());
}

TEST(FreeElement, SpecialLetters) {
  EXPECT_EQ(S(0), NCElement(1));
  EXPECT_TRUE(S(-2).is_zero());
  EXPECT_EQ(letter_expr(Family::Lambda, 0), Expr(1));
  EXPECT_TRUE(letter_expr(Family::Psi, -1).is_zero());
}

TEST(FreeElement, ProductConcatenatesWords) {
  NCElement x = S(1) * S(2);
  EXPECT_EQ(x, NCElement::word({1, 2}));
  EXPECT_NE(x, S(2) * S(1));
  EXPECT_EQ(x.degree(), 3);
}

TEST(FreeElement, TermOrderIsDegreeThenLex) {
  NCElement x = S(3) + S(1) * S(1) + S(1) + NCElement(5);
  std::vector<Word> words;
  for (const auto& [w, c] : x.terms()) words.push_back(w);
  EXPECT_EQ(words, (std::vector<Word>{{}, {1}, {1, 1}, {3}}));
}

TEST(FreeElement, ToString) {
  EXPECT_EQ(to_string(NCElement()), "0");
  EXPECT_NE(to_string(S(1) * S(2)).find("S1"), std::string::npos);
}

TEST(FreeElementProperty, AssociativeAndDistributive) {
  gen::Rng r(21);
  for (int trial = 0; trial < 60; ++trial) {
    NCElement x = gen::element(r), y = gen::element(r), z = gen::element(r);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x + y) * z, x * z + y * z);
    ASSERT_TRUE((x - x).is_zero());
    ASSERT_EQ(reverse_words(reverse_words(x)), x);
    ASSERT_EQ(reverse_words(x * y), reverse_words(y) * reverse_words(x));
  }
}

TEST(FreeElementProperty, ScalarsCommute) {
  gen::Rng r(22);
  for (int trial = 0; trial < 60; ++trial) {
    NCElement x = gen::element(r);
    ParamPoly c = gen::param_poly(r);
    ASSERT_EQ(x * NCElement(c), NCElement(c) * x);
    ASSERT_EQ(x * c, NCElement(c) * x);
  }
}

// 1/((t - b_1)...(t - b_k)) = sum_n h_{n-k}(b_1..b_k) t^{-n}.
TEST(Series, ShiftedDenominatorMatchesCompleteOracle) {
  for (int k = 1; k <= 4; ++k) {
    std::vector<ParamPoly> bs;
    for (int i = 1; i <= k; ++i) bs.push_back(kA.at(i));
    for (int n = k; n <= k + 4; ++n)
      EXPECT_EQ(denominator_expansion(SeriesBasis::shifted_by(kA), k, n), complete_h(n - k, bs)) << k << " " << n;
  }
}

TEST(Series, PlainDenominatorIsKronecker) {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 5; ++n)
      EXPECT_EQ(denominator_expansion(SeriesBasis::plain(), k, n), ParamPoly(n == k ? 1 : 0));
}

TEST(SeriesProperty, InverseIsTwoSided) {
  gen::Rng r(23);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedTSeries x;
    x.order = 4;
    x.constant = NCElement(1);
    for (int k = 1; k <= 4; ++k) x.coeffs.push_back(gen::element(r, k, 2));
    TruncatedTSeries inv = series_inverse(x);
    for (const auto& p : {series_multiply(x, inv), series_multiply(inv, x)}) {
      ASSERT_EQ(p.constant, NCElement(1));
      for (int k = 1; k <= 4; ++k) ASSERT_TRUE(p.coeff(k).is_zero()) << k;
    }
  }
}

TEST(SeriesProperty, ReexpansionRoundTrip) {
  gen::Rng r(24);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedTSeries x;
    x.order = 4;
    x.constant = gen::element(r, 2, 1);
    for (int k = 1; k <= 4; ++k) x.coeffs.push_back(gen::element(r, 3, 2));
    TruncatedTSeries y = series_reexpand(x, SeriesBasis::shifted_by(kA.tau(1)));
    TruncatedTSeries back = series_reexpand(y, SeriesBasis::plain());
    ASSERT_EQ(back.constant, x.constant);
    for (int k = 1; k <= 4; ++k) ASSERT_EQ(back.coeff(k), x.coeff(k)) << k;
  }
}
