#include <gtest/gtest.h>

#include "amds/mdsbuild.hpp"

using namespace amds;

namespace {

QLaurent q(int k) { return QLaurent::q_pow(k); }

}  // namespace

TEST(Reducer, SpotValues) {
  DynkinType t = parse_type("A3~");
  DiagonalSpec d = DiagonalSpec::delta();
  EXPECT_EQ(reduce_coefficient(t, {0, 1, 0, 1}, d), q(2));
  EXPECT_TRUE(reduce_coefficient(t, {1, 1, 0, 0}, d).is_zero());
  EXPECT_EQ(reduce_coefficient(t, {0, 0, 0, 0}, d), QLaurent(1));
  for (int a = 0; a <= 6; ++a) EXPECT_EQ(reduce_coefficient(t, {0, 0, a, 0}, d), q(a));
}

TEST(Reducer, IrreducibleIndicesAreDiagonal) {
  DynkinType t = parse_type("D4~");
  Reducer red(t);
  for (const Exp& a : indices_up_to(t.nv, 8))
    if (red.choose(a) < 0) {
      bool diag = true;
      int m = a[0] / std::max(1, t.alpha0[0]);
      for (int j = 0; j < t.nv; ++j) diag = diag && a[j] == m * t.alpha0[j];
      EXPECT_TRUE(diag);
    }
}

TEST(Diagonal, A3Values) {
  DynkinType t = parse_type("A3~");
  Bipartition b = bipartitions(t)[0];
  DiagonalResult r = determine_diagonal(t, b, 2);
  EXPECT_EQ(r.diag.values[1], q(3));
  EXPECT_EQ(r.diag.values[2], QLaurent(4) * q(5) + QLaurent(3) * q(6));
  EXPECT_TRUE(r.condition_dominance);
  EXPECT_TRUE(r.condition_symmetry);
  TruncSeries G = g_series(t, b, 2);
  EXPECT_EQ(G.coeff({1}), q(2));
  EXPECT_EQ(G.coeff({2}), QLaurent(4) * q(4) - q(6));
}

TEST(Diagonal, BothClassesAgree) {
  for (const char* name : {"A3~", "D4~", "D5~", "E6~"}) {
    DynkinType t = parse_type(name);
    auto bs = bipartitions(t);
    DiagonalResult r0 = determine_diagonal(t, bs[0], 2), r1 = determine_diagonal(t, bs[1], 2);
    EXPECT_EQ(r0.diag.values, r1.diag.values) << name;
    EXPECT_EQ(r0.z_diag, r1.z_diag) << name;
  }
}

TEST(Table, AxiomChecksPassOnConstructedTables) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{{"A3~", 8}, {"A5~", 6}, {"D4~", 8}, {"A2", 8}, {"D4", 6}}) {
    CoeffTable tab = compute_table(parse_type(name), B);
    for (const CheckReport& c : {check_initial_conditions(tab), check_dominance(tab), check_degree_bound(tab),
                                 check_recurrences(tab), check_fe_slices(tab)})
      EXPECT_TRUE(c.ok()) << name << " " << c.name << (c.failures.empty() ? "" : " " + c.failures[0]);
  }
}

TEST(Table, RankOneIsGeometric) {
  CoeffTable tab = compute_table(parse_type("A1"), 10);
  for (int a = 0; a <= 10; ++a) EXPECT_EQ(tab.at({a}), q(a));
  EXPECT_TRUE(compute_table(parse_type("A2"), 6).at({1, 1}).is_zero());
}

TEST(Table, CorruptedTablesFail) {
  CoeffTable tab = compute_table(parse_type("A3~"), 6);
  CoeffTable bad = tab;
  bad.entries[Exp{0, 0, 0, 0}] = QLaurent(2);
  EXPECT_FALSE(check_initial_conditions(bad).ok());
  CoeffTable bad2 = tab;
  bad2.entries[Exp{1, 2, 1, 0}] = bad2.entries[Exp{1, 2, 1, 0}] + q(1);
  EXPECT_FALSE(check_recurrences(bad2).ok() && check_dominance(bad2).ok());
}

TEST(Table, SmallBoundsReportInsufficientSlices) {
  CoeffTable tab = compute_table(parse_type("A3~"), 3);
  CheckReport fe = check_fe_slices(tab);
  EXPECT_TRUE(fe.ok());
  EXPECT_GT(fe.skipped, 0);
}

TEST(Table, ConfluenceOfTheReduction) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{{"A3~", 10}, {"D4~", 8}, {"E6~", 6}}) {
    CheckReport c = check_confluence(parse_type(name), B);
    EXPECT_TRUE(c.ok()) << name;
    EXPECT_GT(c.checked, 0) << name;
  }
}

TEST(Table, LowestTermOfPa) {
  DynkinType t = parse_type("A3~");
  Reducer red(t);
  const int deg[] = {0, 4, 8, 12};
  const Int coef[] = {1, 1, 4, 5};
  for (int a = 0; a <= 3; ++a) {
    LowestTerm lt = p_lowest_term(red, a);
    EXPECT_EQ(lt.degree, deg[a]);
    EXPECT_EQ(lt.coefficient, coef[a]);
  }
}

TEST(Table, IndicesInGradedOrder) {
  auto idx = indices_up_to(3, 4);
  EXPECT_EQ(idx.size(), 35u);
  GradedLess lt;
  for (size_t k = 1; k < idx.size(); ++k) EXPECT_TRUE(lt(idx[k - 1], idx[k]));
}

TEST(Slice, DetectsAChangedCoefficient) {
  CoeffTable tab = compute_table(parse_type("A3~"), 8);
  Exp fixed = {0, 1, 0, 1};
  ASSERT_EQ(fe_slice_check(tab, 0, fixed), SliceResult::Pass);
  tab.entries[Exp{1, 1, 0, 1}] = tab.at({1, 1, 0, 1}) + QLaurent(1);
  EXPECT_EQ(fe_slice_check(tab, 0, fixed), SliceResult::Fail);
}
