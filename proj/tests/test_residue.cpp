#include <gtest/gtest.h>

#include "amds/checks.hpp"
#include "amds/residue.hpp"

using namespace amds;

TEST(Residue, ExtendIndexUsesNeighbourSums) {
  DynkinType t = parse_type("A3~");
  Bipartition b = bipartitions(t)[0];
  EXPECT_EQ(extend_index(t, b, {1, 3}), (Exp{1, 4, 3, 4}));
  EXPECT_EQ(residue_bound(t, 12), 4);
}

TEST(Residue, ClosedFormA3AndA5) {
  for (auto [n, B] : {std::pair{3, 18}, {5, 12}}) {
    DynkinType t = parse_type("A" + std::to_string(n) + "~");
    CoeffTable tab = compute_table(t, B);
    for (const Bipartition& b : bipartitions(t)) {
      TruncSeries R = residue_from_table(tab, b);
      EXPECT_EQ(R, expand(a_closed_form(n, R.bound()), R.bound()));
    }
  }
}

TEST(Residue, OnDemandMatchesTable) {
  DynkinType t = parse_type("D4~");
  CoeffTable tab = compute_table(t, 15);
  Reducer red(t);
  for (const Bipartition& b : bipartitions(t)) {
    TruncSeries R = residue_from_table(tab, b);
    EXPECT_EQ(residue_on_demand(red, b, tab.diag, R.bound()), R);
  }
}

TEST(Residue, BoundIsEnforced) {
  CoeffTable tab = compute_table(parse_type("A3~"), 6);
  Bipartition b = bipartitions(tab.type)[0];
  EXPECT_THROW(residue_from_table(tab, b, 5), UsageError);
}

TEST(Residue, R0TimesR1) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{{"A3~", 12}, {"D4~", 20}, {"D5~", 16}}) {
    DynkinType t = parse_type(name);
    CoeffTable tab = compute_table(t, B);
    for (const Bipartition& b : bipartitions(t)) {
      TruncSeries R = residue_from_table(tab, b);
      int RB = R.bound();
      TruncSeries Q = R * expand(r0_product(t, b, RB), RB).inverse();
      EXPECT_TRUE(diagonal_only(Q, b.restrict_S(t.alpha0))) << name << " " << b.label();
      EXPECT_EQ(Q, expand(r1_closed_form(t, b, RB), RB)) << name << " " << b.label();
    }
  }
}

TEST(Residue, SymmetryAndItsNegation) {
  DynkinType t = parse_type("A3~");
  Bipartition b = bipartitions(t)[0];
  ZetaProduct r0 = r0_product(t, b, 6);
  EXPECT_TRUE(symmetry_check(r0, t, b));
  EXPECT_TRUE(symmetry_check(a_closed_form(3, 6), t, b));
  ZetaProduct broken = r0;
  broken.add(5, {1, 0}, 1);
  EXPECT_FALSE(symmetry_check(broken, t, b));
}

TEST(Residue, TauGeneratorsAllTypes) {
  for (auto [name, B] : std::vector<std::pair<std::string, int>>{
           {"A3~", 6}, {"A5~", 8}, {"A7~", 8}, {"D4~", 10}, {"D5~", 10}, {"D6~", 10}, {"D7~", 10}, {"D8~", 10},
           {"E6~", 14}, {"E7~", 10}, {"E8~", 12}}) {
    DynkinType t = parse_type(name);
    for (const Bipartition& b : bipartitions(t)) {
      TauReport r = tau_orbit_check(t, b, B);
      for (const TauCheck& g : r.generators) EXPECT_TRUE(g.ok()) << name << " " << b.label() << " " << g.name << " " << g.detail;
    }
  }
}

TEST(Residue, ConjecturedR1AtOrderTwo) {
  for (const char* name : {"A3~", "A5~", "D4~", "D6~", "E6~", "E7~"}) {
    DynkinType t = parse_type(name);
    Reducer red(t);
    for (const Bipartition& b : bipartitions(t)) {
      DiagonalResult d = determine_diagonal(red, b, 2);
      EXPECT_EQ(d.r1_S, r1_closed_form(t, b, 2 * b.hS(t))) << name << " " << b.label();
    }
  }
}

TEST(Residue, PartitionCounts) {
  for (int n : {3, 5}) {
    TruncSeries rf = r_flat_diag(n, 6);
    for (int a = 0; a <= 6; ++a) EXPECT_EQ(rf.coeff({a}), QLaurent(partition_count(n, a)));
  }
  EXPECT_EQ(partition_count(3, 0), 1);
}
