#include <gtest/gtest.h>

#include <functional>

#include "gen.hpp"
#include "ncshift/special.hpp"

using namespace ncshift;

namespace {

std::vector<Rational> random_scalars(gen::Rng& r, int n) {
  std::vector<Rational> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Rational(r.range(-9, 9), r.range(1, 3)));
  return xs;
}

// Reverse tableau sums for a_i = i - 1: one row (k) has weakly decreasing
// entries and contents 0..k-1, one column (1^k) strictly decreasing entries
// and contents 0..-(k-1).
Rational row_tableau_sum(int k, const std::vector<Rational>& xs, bool column) {
  const int n = static_cast<int>(xs.size());
  Rational total;
  std::function<void(int, int, Rational)> rec = [&](int r, int top, Rational acc) {
    if (r == k) {
      total += acc;
      return;
    }
    for (int i = (column ? top - 1 : top); i >= 1; --i)
      rec(r + 1, i, acc * (xs[i - 1] + Rational(column ? r : -r)));
  };
  rec(0, column ? n + 1 : n, Rational(1));
  return total;
}

VariableAssignment scalar_assignment(const std::vector<Rational>& xs) {
  VariableAssignment v;
  for (const Rational& x : xs) v.vars.push_back(scalar_matrix(1, x));
  return v;
}

}  // namespace

TEST(Special, ValidateRejectsBadAssignments) {
  VariableAssignment v;
  EXPECT_THROW(v.validate(), std::invalid_argument);
  v.vars = {identity(2), identity(3)};
  v.d = 2;
  EXPECT_THROW(v.validate(), std::invalid_argument);
  v.vars = {identity(2)};
  EXPECT_NO_THROW(v.validate());
  v.d = 0;
  EXPECT_THROW(v.validate(), std::invalid_argument);
}

TEST(Special, ShiftedPowerIsFallingFactorial) {
  auto sub = ParamSubstitution::equidistant(Rational(1), Rational(kFallingBase));
  for (int x = -3; x <= 6; ++x)
    for (int k = 0; k <= 5; ++k) {
      Rational want(1);
      for (int i = 0; i < k; ++i) want *= Rational(x - i);
      EXPECT_EQ(shifted_power(scalar_matrix(1, Rational(x)), sub, k)(0, 0), want) << x << " " << k;
    }
}

TEST(Special, OracleMatchesReverseTableaux) {
  gen::Rng r(71);
  for (int trial = 0; trial < 20; ++trial) {
    int n = r.range(1, 4), k = r.range(1, 4);
    auto xs = random_scalars(r, n);
    try {
      ASSERT_EQ(h_star(k, xs), row_tableau_sum(k, xs, false)) << n << " " << k;
      ASSERT_EQ(e_star(k, xs), row_tableau_sum(k, xs, true)) << n << " " << k;
    } catch (const SingularMinor&) {
    }
  }
}

TEST(Special, OneVariableValues) {
  // n = 1, a_i = i - 1: Lambda_1 = x and S_k is the one-variable oracle.
  for (int x : {2, 5, -3}) {
    VariableAssignment v = scalar_assignment({Rational(x)});
    EXPECT_EQ(lambda_spec(1, v).value(0, 0), Rational(x));
    EXPECT_TRUE(is_zero(lambda_spec(2, v).value));
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(s_spec(k, v).value(0, 0), h_star(k, {Rational(x)}));
  }
}

TEST(Special, ZeroDegreeIsIdentity) {
  std::uint64_t state = 5;
  VariableAssignment v = VariableAssignment::random(2, 2, Rational(1), Rational(-1), state);
  EXPECT_EQ(s_spec(0, v).value, identity(2));
  EXPECT_EQ(lambda_spec(0, v).value, identity(2));
}

TEST(Special, LambdaVanishesPastN) {
  std::uint64_t state = 9;
  for (int n = 1; n <= 3; ++n) {
    VariableAssignment v = VariableAssignment::random(n, 2, Rational(1), Rational(-1), state);
    EXPECT_TRUE(is_zero(lambda_spec(n + 1, v).value));
    EXPECT_TRUE(is_zero(lambda_spec(n + 3, v).value));
  }
}

TEST(Special, EvaluatorIsMultiplicative) {
  std::uint64_t state = 11;
  VariableAssignment v = VariableAssignment::random(3, 2, Rational(1), Rational(-1), state);
  Evaluator ev(v);
  EXPECT_EQ(ev(S(1) * S(2)), ev.s(1) * ev.s(2));
  EXPECT_EQ(ev(NCElement(3)), scalar_matrix(2, Rational(3)));
  EXPECT_EQ(ev.s(2), s_spec(2, v).value);
  EXPECT_TRUE(is_zero(ev.shifted_s(-1, 0)));
  EXPECT_TRUE(is_zero(ev.shifted_lambda(-2, 1)));
}

TEST(Special, AssignmentTransforms) {
  VariableAssignment v = scalar_assignment({Rational(1), Rational(4)});
  VariableAssignment w = shifted_swap(v, 1);
  EXPECT_EQ(w.vars[0](0, 0), Rational(3));
  EXPECT_EQ(w.vars[1](0, 0), Rational(2));
  EXPECT_THROW(shifted_swap(v, 2), std::invalid_argument);
  EXPECT_EQ(extend(v).n(), 3);
  EXPECT_EQ(extend(v).vars[2](0, 0), v.a(1));
  EXPECT_EQ(translate(v, Rational(2)).vars[1](0, 0), Rational(6));
}

TEST(Special, Partitions) {
  EXPECT_EQ(conjugate_partition({1, 3}), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(conjugate_partition({2}), (std::vector<int>{1, 1}));
  auto [alpha, beta] = frobenius({3, 1});
  EXPECT_EQ(alpha, (std::vector<int>{2}));
  EXPECT_EQ(beta, (std::vector<int>{1}));
  auto [a2, b2] = frobenius({3, 3, 1});
  EXPECT_EQ(a2, (std::vector<int>{1, 2}));
  EXPECT_EQ(b2, (std::vector<int>{0, 2}));
  EXPECT_EQ(giambelli_partitions().size(), 15u);
  for (const auto& p : giambelli_partitions()) EXPECT_LE(frobenius(p).first.size(), 2u);
}

TEST(Special, ChecksAtFixedSeeds) {
  EXPECT_TRUE(verify_printed_small(2, 3).pass);
  EXPECT_TRUE(verify_extension(2, 2, 2, 3).pass);
  EXPECT_TRUE(verify_recovery(3, 3, 3).pass);
  EXPECT_TRUE(verify_quasi_schur_examples(3, 2, 3).pass);
  EXPECT_TRUE(verify_conjugate_quasi_schur(3, 2, 3).pass);
  EXPECT_FALSE(verify_vanishing(2, 2, SpecFamily::S, 3).pass);
  EXPECT_TRUE(verify_vanishing(2, 2, SpecFamily::Lambda, 3).pass);
}

TEST(SpecialProperty, ShiftedSwapInvariance) {
  gen::Rng r(73);
  for (int trial = 0; trial < 10; ++trial) {
    std::uint64_t state = r.next();
    int n = r.range(2, 3);
    VariableAssignment v = VariableAssignment::random(n, 2, Rational(1), Rational(-1), state);
    try {
      for (int i = 1; i < n; ++i) ASSERT_TRUE(check_shifted_symmetry(r.range(1, 3), v, i));
    } catch (const SingularMinor&) {
    }
  }
}

TEST(SpecialProperty, CommutativeRecovery) {
  gen::Rng r(74);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto xs = random_scalars(r, r.range(1, 3));
    try {
      ASSERT_TRUE(commutative_recovery(r.range(1, 4), xs));
      ++checked;
    } catch (const SingularMinor&) {
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(SpecialProperty, ReseedIsDeterministic) {
  CheckResult x = verify_shifted_symmetry(3, 2, 2, 17), y = verify_shifted_symmetry(3, 2, 2, 17);
  EXPECT_EQ(x.pass, y.pass);
  EXPECT_EQ(x.seed, y.seed);
  EXPECT_EQ(x.retries, y.retries);
}
