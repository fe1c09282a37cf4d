#include <gtest/gtest.h>

#include "gen.hpp"
#include "ncshift/families.hpp"
#include "ncshift/ribbon.hpp"

using namespace ncshift;

TEST(Compositions, CountsAndOrder) {
  for (int d = 1; d <= 7; ++d) EXPECT_EQ(compositions(d).size(), std::size_t{1} << (d - 1));
  EXPECT_EQ(compositions(3), (std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
}

TEST(Compositions, ValidateRejectsBadShapes) {
  EXPECT_THROW(validate({}), std::invalid_argument);
  EXPECT_THROW(validate({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(validate({-1}), std::invalid_argument);
  EXPECT_NO_THROW(validate({1}));
}

TEST(Compositions, CanonicalShifts) {
  EXPECT_EQ(canonical_shifts({2, 1, 3}), (ShiftVector{3, 1, 0}));
  EXPECT_EQ(canonical_shifts({5}), (ShiftVector{0}));
}

TEST(Compositions, Conjugate) {
  EXPECT_EQ(conjugate({3}), (Composition{1, 1, 1}));
  EXPECT_EQ(conjugate({2, 1, 1}), (Composition{3, 1}));
  EXPECT_EQ(conjugate({2, 2, 3, 2}), (Composition{1, 2, 1, 2, 2, 1}));
  for (int d = 1; d <= 7; ++d)
    for (const auto& c : compositions(d)) {
      Composition j = conjugate(c);
      ASSERT_EQ(degree(j), d);
      ASSERT_EQ(conjugate(j), c);
      ASSERT_EQ(c.size() + j.size(), static_cast<std::size_t>(d + 1));
    }
}

TEST(Compositions, Concatenations) {
  EXPECT_EQ(concat({1, 2}, {3}), (Composition{1, 2, 3}));
  EXPECT_EQ(near_concat({1, 2}, {3, 1}), (Composition{1, 5, 1}));
}

TEST(Ribbon, RowAndColumn) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(ribbon({k}), S(k));
    EXPECT_EQ(ribbon(Composition(k, 1)), lambda_in_S(k)) << k;
  }
}

// R_(1,2) from the 2 x 2 Hessenberg matrix: S_1^{[1]} S_2 - S_3^{[1]}.
TEST(Ribbon, TwoPartOracle) {
  EXPECT_EQ(ribbon({1, 2}), shift_S(1, 1) * S(2) - shift_S(3, 1));
  EXPECT_EQ(ribbon_shifted({2, 1}, {3, 0}), shift_S(2, 3) * S(1) - shift_S(3, 3));
}

TEST(Ribbon, SmallIdentities) {
  EXPECT_TRUE(verify_ribbon_basis(4).pass);
  EXPECT_TRUE(verify_macmahon(5).pass);
  EXPECT_TRUE(verify_hook_formula(5).pass);
  EXPECT_TRUE(verify_ribbon_recursions(4).pass);
  EXPECT_TRUE(verify_product_examples(4).pass);
  EXPECT_TRUE(verify_duality(5).pass);
  EXPECT_FALSE(verify_duality(3, true).pass);
  EXPECT_TRUE(verify_nagelsbach(5).pass);
  EXPECT_TRUE(verify_nagelsbach_examples().pass);
  EXPECT_TRUE(verify_omega_involution(6).pass);
  EXPECT_TRUE(verify_omega_shift(4, 2).pass);
}

TEST(Ribbon, DualityShift) {
  // j_m - d + i_n - 1 for the self-conjugate (2,1): 1 - 3 + 1 - 1.
  EXPECT_EQ(conjugate({2, 1}), (Composition{2, 1}));
  EXPECT_EQ(duality_shift({2, 1}), -2);
  EXPECT_EQ(duality_shift({2, 1}, true), -1);
  // (1,1,2) has conjugate (1,3): 3 - 4 + 2 - 1.
  EXPECT_EQ(conjugate({1, 1, 2}), (Composition{1, 3}));
  EXPECT_EQ(duality_shift({1, 1, 2}), 0);
}

TEST(RibbonProperty, BasisRoundTrip) {
  gen::Rng r(51);
  for (int trial = 0; trial < 20; ++trial) {
    NCElement x = gen::element(r, 5, 3);
    RibbonElement rb = to_ribbon_basis(x);
    ASSERT_TRUE(rb.is_canonical());
    ASSERT_EQ(from_ribbon_basis(rb), x);
  }
}

// MacMahon products with the canonical shifts moved by a common offset t.
TEST(RibbonProperty, ShiftedMacMahon) {
  gen::Rng r(52);
  for (int trial = 0; trial < 15; ++trial) {
    auto ci = compositions(r.range(1, 3)), cj = compositions(r.range(1, 3));
    Composition i = ci[r.range(0, static_cast<int>(ci.size()) - 1)];
    Composition j = cj[r.range(0, static_cast<int>(cj.size()) - 1)];
    int s = 0, t = r.range(-2, 3);
    macmahon_product(i, j, &s);
    ShiftVector k = add_scalar(canonical_shifts(i), s + t), l = add_scalar(canonical_shifts(j), t);
    NCElement lhs = ribbon_shifted(i, k) * ribbon_shifted(j, l);
    ASSERT_EQ(from_ribbon_basis(macmahon_product(i, k, j, l)), lhs) << trial;
  }
}

TEST(RibbonProperty, OmegaIsAntiMultiplicative) {
  gen::Rng r(53);
  for (int trial = 0; trial < 10; ++trial) {
    NCElement x = gen::element(r, 3, 2), y = gen::element(r, 3, 2);
    ASSERT_EQ(omega(x * y), omega(y) * omega(x));
    ASSERT_EQ(omega(omega(x), kAHat), x);
  }
}
