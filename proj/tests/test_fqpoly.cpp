#include <gtest/gtest.h>

#include <random>

#include "amds/fqpoly.hpp"

using namespace amds;

namespace {

FieldPoly random_poly(const FiniteField& F, std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(0, F.q() - 1);
  FieldPoly f;
  for (int k = 0; k <= deg; ++k) f.c.push_back(c(rng));
  return poly_trim(f);
}

// Number of monic irreducibles of degree d by Gauss's formula.
Int gauss_count(int q, int d) {
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  Int s = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) s += mobius(d / e) * ipow(q, e);
  return s / d;
}

}  // namespace

TEST(FiniteField, RejectsPrimePowersAndComposites) {
  EXPECT_THROW(FiniteField(9), UsageError);
  EXPECT_THROW(FiniteField(15), UsageError);
  FiniteField F(13);
  for (int a = 1; a < 13; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
  EXPECT_EQ(F.num_squares(), 6);
}

TEST(FieldPoly, DivisionIdentity) {
  FiniteField F(5);
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    FieldPoly a = random_poly(F, rng, 6), b = random_poly(F, rng, 3);
    if (b.is_zero()) continue;
    auto [qt, r] = poly_divmod(F, a, b);
    EXPECT_EQ(poly_add(F, poly_mul(F, qt, b), r), a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(FieldPoly, IrreducibleCountsMatchGauss) {
  for (int q : {5, 13})
    for (int d = 1; d <= (q == 5 ? 4 : 2); ++d)
      EXPECT_EQ(static_cast<Int>(monic_irreducibles(FiniteField(q), d).size()), gauss_count(q, d)) << q << " " << d;
}

TEST(FieldPoly, FactorizationMultipliesBack) {
  FiniteField F(5);
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    FieldPoly f = random_poly(F, rng, 6);
    if (f.is_zero()) continue;
    Factorization fac = factor(F, f);
    EXPECT_EQ(multiply_out(F, fac), f);
    for (auto& [p, e] : fac.factors) {
      EXPECT_TRUE(is_irreducible(F, p));
      EXPECT_TRUE(p.is_monic());
      EXPECT_GE(e, 1);
    }
  }
}

TEST(FieldPoly, MonicRankBijection) {
  FiniteField F(5);
  for (int d = 0; d <= 3; ++d) {
    auto all = enumerate_monic(F, d);
    ASSERT_EQ(static_cast<Int>(all.size()), ipow(5, d));
    for (size_t k = 0; k < all.size(); ++k) {
      EXPECT_EQ(monic_rank(F, all[k]), static_cast<int64_t>(k));
      EXPECT_EQ(monic_from_rank(F, d, static_cast<int64_t>(k)), all[k]);
    }
  }
}

TEST(ResidueSymbol, MultiplicativeInTheTop) {
  FiniteField F(5);
  auto polys = enumerate_monic(F, 2);
  auto gs = enumerate_monic(F, 2);
  for (size_t i = 0; i < polys.size(); i += 3)
    for (size_t j = 0; j < polys.size(); j += 4)
      for (size_t k = 0; k < gs.size(); k += 2) {
        FieldPoly fg = poly_mul(F, polys[i], polys[j]);
        EXPECT_EQ(residue_symbol(F, fg, gs[k]), residue_symbol(F, polys[i], gs[k]) * residue_symbol(F, polys[j], gs[k]));
      }
}

TEST(ResidueSymbol, ReciprocityExhaustiveSmall) {
  FiniteField F(13);
  std::vector<FieldPoly> monic;
  for (int d = 0; d <= 2; ++d)
    for (auto& f : enumerate_monic(F, d)) monic.push_back(f);
  for (const auto& f : monic)
    for (const auto& g : monic) {
      EXPECT_EQ(residue_symbol(F, f, g), residue_symbol(F, g, f));
      EXPECT_EQ(residue_symbol(F, f, g), residue_symbol_reciprocity(F, f, g));
    }
}

TEST(ResidueSymbol, ConstantTop) {
  FiniteField F(5);
  // 2 is a nonsquare mod 5: (2/g) = -1 exactly when deg g is odd.
  for (int d = 0; d <= 3; ++d)
    for (auto& g : enumerate_monic(F, d)) EXPECT_EQ(residue_symbol(F, poly_const(2), g), d % 2 ? -1 : 1);
}

TEST(LFunction, FunctionalEquationAndRH) {
  for (int q : {5, 13}) {
    FiniteField F(q);
    for (int d = 1; d <= (q == 5 ? 4 : 3); ++d)
      for (auto& f : enumerate_monic(F, d)) {
        if (!is_squarefree(F, f)) continue;
        LPoly L = lfunction(F, f, d);
        EXPECT_TRUE(check_lfe(L));
        EXPECT_TRUE(check_rh_bound(L));
        // Coefficients vanish from degree deg f on.
        for (int k = d; k < static_cast<int>(L.coeffs.size()); ++k) EXPECT_EQ(L.coeffs[k], 0);
      }
  }
}

TEST(LFunction, BrokenCoefficientsFailTheFunctionalEquation) {
  FiniteField F(5);
  FieldPoly f;
  for (auto& g : enumerate_monic(F, 3))
    if (is_squarefree(F, g)) {
      f = g;
      break;
    }
  LPoly L = lfunction(F, f, 3);
  L.coeffs[2] += 1;  // the middle coefficient is self-dual, the top one is not
  EXPECT_FALSE(check_lfe(L));
}
