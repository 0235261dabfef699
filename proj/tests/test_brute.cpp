#include <gtest/gtest.h>

#include "amds/brute.hpp"
#include "amds/residue.hpp"

using namespace amds;

TEST(Brute, RejectsQThreeModFour) {
  CoeffTable tab = compute_table(parse_type("A3~"), 4);
  EXPECT_THROW(BruteContext(7, tab, 2), UsageError);
  EXPECT_THROW(BruteContext(3, tab, 2), UsageError);
}

TEST(Brute, MatchesTableA3AndA2) {
  for (const char* name : {"A3~", "A2", "A1"}) {
    CoeffTable tab = compute_table(parse_type(name), 6);
    BruteContext ctx(5, tab, 3);
    for (const Exp& a : indices_up_to(tab.type.nv, 3))
      EXPECT_EQ(brute_force_coeff(ctx, a), tab.at(a).eval_poly(5)) << name;
  }
}

TEST(Brute, SerialEqualsParallel) {
  CoeffTable tab = compute_table(parse_type("D4~"), 6);
  BruteContext ctx(5, tab, 3);
  for (const Exp& a : indices_up_to(5, 3)) EXPECT_EQ(brute_force_coeff(ctx, a), brute_force_coeff_serial(ctx, a));
  Bipartition b = bipartitions(tab.type)[1];  // S = {3}
  for (int a = 0; a <= 1; ++a)
    EXPECT_EQ(residue_square_sum_raw(ctx, b, {a}), residue_square_sum_raw_serial(ctx, b, {a}));
}

TEST(Brute, GlobalWeightOfOnesIsOne) {
  CoeffTable tab = compute_table(parse_type("A3~"), 4);
  BruteContext ctx(5, tab, 2);
  std::vector<FieldPoly> ones(4, poly_const(1));
  EXPECT_EQ(global_weight(ctx, ones), 1);
}

TEST(Brute, LocalWeightNeedsTheTable) {
  CoeffTable tab = compute_table(parse_type("A3~"), 2);
  BruteContext ctx(5, tab, 2);
  EXPECT_THROW(ctx.local_weight({2, 1, 0, 0}, 1), UsageError);
}

TEST(Brute, SquareSumEqualsResidue) {
  DynkinType t = parse_type("A3~");
  CoeffTable tab = compute_table(t, 12);
  Bipartition b = bipartitions(t)[0];
  TruncSeries R = residue_from_table(tab, b);
  BruteContext ctx(5, tab, 4);
  for (const Exp& aS : std::vector<Exp>{{0, 0}, {1, 1}, {2, 0}, {0, 2}, {1, 0}, {2, 2}})
    EXPECT_EQ(residue_square_sum(ctx, b, aS), eval_at(R.coeff(aS), 5));
}

TEST(Brute, EvalAtHandlesNegativePowers) {
  QLaurent c = QLaurent::q_pow(-1) + QLaurent(2);
  EXPECT_EQ(eval_at(c, 5), Rational(11, 5));
}
