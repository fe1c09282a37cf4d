#include <gtest/gtest.h>

#include <functional>
#include <thread>

#include "gen.hpp"
#include "ncshift/families.hpp"

using namespace ncshift;

namespace {

ParamPoly a(int i) { return ParamPoly::var(i); }

// Direct sum over 1 <= s_1 < ... < s_nu <= l.
ParamPoly a_binomial_oracle(int l, int nu, int k, const Seq& b) {
  ParamPoly total;
  std::vector<int> s(nu);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == nu) {
      ParamPoly t(1);
      for (int i = 1; i <= nu; ++i) t *= b.at(k + (nu - i) + s[i - 1]) - b.at(s[i - 1]);
      total += t;
      return;
    }
    for (int v = from; v <= l; ++v) {
      s[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return total;
}

}  // namespace

TEST(ABinomial, MatchesSubsetSum) {
  for (const Seq& b : {kA, kAHat, kA.tau(2)})
    for (int l = 0; l <= 4; ++l)
      for (int nu = 0; nu <= l; ++nu)
        for (int k = 0; k <= 3; ++k) EXPECT_EQ(a_binomial(l, nu, k, b), a_binomial_oracle(l, nu, k, b)) << l << nu << k;
}

TEST(ABinomial, EdgeCases) {
  EXPECT_EQ(a_binomial(3, 0, 2), ParamPoly(1));
  EXPECT_TRUE(a_binomial(2, 3, 1).is_zero());
  // nu = l = 1: b_{k+1} - b_1.
  EXPECT_EQ(a_binomial(1, 1, 2), a(3) - a(1));
}

TEST(Families, UnshiftedGeneratorsAreThemselves) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(shift_S(k, 0), S(k));
    EXPECT_EQ(shift_Lambda(k, 0), lambda_in_S(k));
  }
}

// From S_2^{[1]} - S_1^{[1]} Lambda_1 + Lambda_2 = 0 with the shift closed form.
TEST(Families, LowDegreeLambda) {
  EXPECT_EQ(lambda_in_S(0), NCElement(1));
  EXPECT_EQ(lambda_in_S(1), S(1));
  EXPECT_EQ(lambda_in_S(2), S(1) * S(1) - S(2) - S(1) * (a(1) - a(0)));
  EXPECT_EQ(shift_S(1, 3), S(1));
}

TEST(Families, PsiOneIsSOne) { EXPECT_EQ(psi(1), S(1)); }

TEST(Families, DefiningRelationSmall) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(verify_defining_relation(n).pass) << n;
}

TEST(Families, DefiningRelationDetectsMutation) {
  std::vector<NCElement> lambdas;
  for (int k = 0; k <= 4; ++k) lambdas.push_back(lambda_in_S(k));
  lambdas[3] += S(3);
  CheckResult r = verify_defining_relation(4, &lambdas);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Families, SmallIdentities) {
  EXPECT_TRUE(verify_lineareq(4).pass);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(verify_base_change(n).pass) << n;
    EXPECT_TRUE(verify_wronski_newton(n).pass) << n;
    EXPECT_TRUE(verify_translation_quasidets(n).pass) << n;
  }
  EXPECT_TRUE(verify_psi_examples().pass);
  EXPECT_TRUE(verify_shift_examples(4).pass);
  EXPECT_FALSE(verify_shift_examples(4, true).pass);
  EXPECT_TRUE(verify_falling_example(4).pass);
}

TEST(FamiliesProperty, RewriteRoundTrip) {
  gen::Rng r(31);
  for (Family f : {Family::S, Family::Lambda, Family::Psi})
    for (int trial = 0; trial < 15; ++trial) {
      NCElement x = gen::element(r, 4, 3);
      ASSERT_EQ(to_S(rewrite_in_family(x, f)), x);
    }
}

TEST(FamiliesProperty, PhiIsMultiplicativeAndComposes) {
  gen::Rng r(32);
  for (int trial = 0; trial < 15; ++trial) {
    NCElement x = gen::element(r, 3, 2), y = gen::element(r, 3, 2);
    int s = r.range(-2, 2), t = r.range(-2, 2);
    ASSERT_EQ(phi_shift(x * y, s), phi_shift(x, s) * phi_shift(y, s));
    ASSERT_EQ(phi_shift(phi_shift(x, t), s), phi_shift(x, s + t));
    ASSERT_EQ(phi_shift(x, 0), x);
  }
}

// Generators computed from several threads agree with a serial computation.
TEST(Families, MemoIsThreadSafe) {
  std::vector<NCElement> par(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&par, i] { par[i] = shift_Lambda(5, -4 + (i % 3)) * shift_S(4, 7 + (i % 2)); });
  for (auto& th : threads) th.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(par[i], shift_Lambda(5, -4 + (i % 3)) * shift_S(4, 7 + (i % 2)));
}
