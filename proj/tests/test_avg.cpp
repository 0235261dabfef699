#include <gtest/gtest.h>

#include "amds/avg.hpp"
#include "amds/checks.hpp"

using namespace amds;

namespace {

LaurentPoly mono(const Exp& e, const QLaurent& c) { return LaurentPoly{{e, c}}; }

}  // namespace

TEST(Avg, DivideBinomialExactAndInexact) {
  // (1 - q x^2)(1 + x) = 1 + x - q x^2 - q x^3
  LaurentPoly p = {{{0}, QLaurent(1)}, {{1}, QLaurent(1)}, {{2}, -QLaurent::q_pow(1)}, {{3}, -QLaurent::q_pow(1)}};
  LaurentPoly quo;
  ASSERT_TRUE(divide_binomial(p, 2, {2}, quo));
  EXPECT_EQ(quo, (LaurentPoly{{{0}, QLaurent(1)}, {{1}, QLaurent(1)}}));
  EXPECT_FALSE(divide_binomial(p, 2, {1}, quo));
}

TEST(Avg, SigmaIsAnInvolution) {
  for (const char* name : {"A2", "A3~", "D4~"}) {
    DynkinType t = parse_type(name);
    for (int i = 0; i < t.nv; ++i) {
      AvgFraction one = AvgFraction::one(t.nv);
      AvgFraction twice = apply_sigma_op(t, apply_sigma_op(t, one, i), i);
      cancel_common(twice);
      EXPECT_EQ(twice, one) << name << " " << i;
      Exp e(t.nv, 0);
      e[(i + 1) % t.nv] = 1;
      AvgFraction f = AvgFraction::poly(mono(e, QLaurent(1)));
      AvgFraction f2 = apply_sigma_op(t, apply_sigma_op(t, f, i), i);
      cancel_common(f2);
      EXPECT_EQ(f2, f) << name << " " << i;
    }
  }
}

TEST(Avg, FiniteTypesReproduceTheTable) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{{"A1", 8}, {"A2", 8}, {"A3", 8}, {"D4", 6}}) {
    DynkinType t = parse_type(name);
    AvgResult a = z_avg(t, B);
    EXPECT_TRUE(a.no_negative);
    EXPECT_TRUE(a.certificate_ok);
    EXPECT_EQ(a.z, table_series(compute_table(t, B))) << name;
  }
}

TEST(Avg, AffineRatioIsDiagonal) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{{"A3~", 8}, {"D4~", 6}, {"A5~", 6}}) {
    DynkinType t = parse_type(name);
    AvgResult a = z_avg(t, B);
    CheckReport rec = check_recurrences(series_table(t, a.z));
    EXPECT_TRUE(rec.ok()) << name;
    RatioCheck rc = ratio_diagonal_check(compute_table(t, B), a.z);
    EXPECT_TRUE(rc.diagonal) << name << " " << rc.ratio.str();
  }
}

TEST(Avg, RatioCheckCatchesOffDiagonalTerms) {
  DynkinType t = parse_type("A3~");
  CoeffTable tab = compute_table(t, 6);
  AvgResult a = z_avg(t, 6);
  tab.entries[Exp{1, 0, 0, 0}] = tab.at({1, 0, 0, 0}) + QLaurent(1);
  EXPECT_FALSE(ratio_diagonal_check(tab, a.z).diagonal);
}

TEST(Avg, WeylDenominatorsAreInverse) {
  DynkinType t = parse_type("A2");
  WeylDenominators w = weyl_denominators(t, 8);
  // Roots a1, a2, a1+a2 of heights 1, 1, 2.
  EXPECT_EQ(w.D.coeff({2, 0}), -QLaurent::q_pow(2));
  EXPECT_EQ(w.Delta.coeff({2, 0}), -QLaurent::q_pow(1));
  EXPECT_EQ(w.Delta.coeff({2, 2}), QLaurent::q_pow(2) - QLaurent::q_pow(2));
}
