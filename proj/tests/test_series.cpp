#include <gtest/gtest.h>

#include "amds/series.hpp"

using namespace amds;

TEST(Series, GeometricExpansion) {
  ZetaProduct z(1);
  z.add(2, {1}, 1);  // (1 - q x)^{-1}
  TruncSeries s = expand(z, 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(s.coeff({k}), QLaurent::q_pow(k));
  EXPECT_TRUE(s.coeff({7}).is_zero());
}

TEST(Series, BinomialCoefficients) {
  for (int lam = -4; lam <= 4; ++lam)
    for (int k = 0; k <= 6; ++k) {
      // (1 - y)^{-lam}: C(lam + k - 1, k) with sign for negative lam.
      Int expect = lam >= 0 ? binom(lam + k - 1, k) : ((k % 2 ? -1 : 1) * binom(-lam, k));
      if (lam == 0) expect = k == 0 ? 1 : 0;
      EXPECT_EQ(zeta_binomial(lam, k), expect) << lam << " " << k;
    }
}

TEST(Series, InverseAndProduct) {
  ZetaProduct z(2);
  z.add(0, {1, 0}, 1);
  z.add(2, {1, 1}, 2);
  z.add(1, {0, 2}, -1);
  TruncSeries s = expand(z, 8), si = expand(z.inverse(), 8);
  EXPECT_EQ(s * si, TruncSeries::one(2, 8));
  EXPECT_EQ(s.inverse(), si);
}

TEST(Series, FactorizeRoundTrip) {
  ZetaProduct z(3);
  z.add(0, {1, 0, 0}, 1);
  z.add(2, {1, 0, 0}, 1);
  z.add(3, {0, 1, 1}, -2);
  z.add(4, {1, 1, 1}, 3);
  z.add(1, {2, 0, 1}, 1);
  const int B = 7;
  EXPECT_EQ(factorize(expand(z, B), B), z.truncated(B));
  EXPECT_EQ(expand(factorize(expand(z, B), B), B), expand(z, B));
}

TEST(Series, TruncationDropsHighTerms) {
  TruncSeries s(2, 3);
  s.add({2, 2}, QLaurent(1));
  EXPECT_TRUE(s.terms().empty());
  TruncSeries t(2, 3);
  t.add({1, 1}, QLaurent(5));
  EXPECT_EQ(t.with_bound(1).terms().size(), 0u);
}

TEST(Series, NegativeExponentOutsideWindowThrows) {
  TruncSeries s(1, 4);
  EXPECT_THROW(s.add({-1}, QLaurent(1)), WindowOverflow);
}

TEST(Series, DiagonalPart) {
  TruncSeries s(2, 6);
  s.add({0, 0}, QLaurent(1));
  s.add({1, 2}, QLaurent(3));
  s.add({2, 4}, QLaurent(4));
  s.add({1, 1}, QLaurent(9));
  TruncSeries d = diagonal_part(s, {1, 2});
  EXPECT_EQ(d.coeff({1}), QLaurent(3));
  EXPECT_EQ(d.coeff({2}), QLaurent(4));
  EXPECT_EQ(d.terms().size(), 3u);
}

TEST(Series, GradedOrderIsTotal) {
  GradedLess lt;
  EXPECT_TRUE(lt({0, 1}, {2, 0}));
  EXPECT_TRUE(lt({0, 2}, {1, 1}) != lt({1, 1}, {0, 2}));
  EXPECT_FALSE(lt({1, 1}, {1, 1}));
}
