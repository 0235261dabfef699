#include <gtest/gtest.h>

#include <set>

#include "amds/rootsys.hpp"

using namespace amds;

TEST(Types, ParseAndReject) {
  EXPECT_EQ(parse_type("A3~").nv, 4);
  EXPECT_EQ(parse_type("D4~").nv, 5);
  EXPECT_EQ(parse_type("E8~").nv, 9);
  EXPECT_EQ(parse_type("A2").nv, 2);
  EXPECT_THROW(parse_type("B3"), UsageError);
  EXPECT_THROW(parse_type("E9"), UsageError);
  try {
    parse_type("A4~");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_STREQ(e.what(), "A~ with even n unsupported");
  }
}

TEST(Types, ImaginaryRootIsInvariant) {
  const std::vector<std::pair<std::string, int>> h = {{"A3~", 4}, {"A5~", 6}, {"D4~", 6}, {"D5~", 8},
                                                      {"E6~", 12}, {"E7~", 18}, {"E8~", 30}};
  for (const auto& [name, ht] : h) {
    DynkinType t = parse_type(name);
    EXPECT_EQ(t.ht_alpha0(), ht) << name;
    for (int i = 0; i < t.nv; ++i) EXPECT_EQ(simple_reflect(t, i, t.alpha0), t.alpha0) << name;
  }
}

TEST(Types, LabelingsMatchTheDocumentedTable) {
  DynkinType d = parse_type("D6~");
  // 1-3, 2-3, 3-4-5, 5-6, 5-7 in 1-based labels.
  EXPECT_TRUE(d.adjacent(0, 2));
  EXPECT_TRUE(d.adjacent(1, 2));
  EXPECT_TRUE(d.adjacent(2, 3));
  EXPECT_TRUE(d.adjacent(4, 5));
  EXPECT_TRUE(d.adjacent(4, 6));
  DynkinType a = parse_type("A5~");
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(a.adjacent(i, (i + 1) % 6));
  for (const char* name : {"E6~", "E7~", "E8~"}) {
    DynkinType e = parse_type(name);
    int edges = 0, branch = 0;
    for (int i = 0; i < e.nv; ++i) {
      edges += e.N(i);
      if (e.N(i) == 3) ++branch;
    }
    EXPECT_EQ(edges / 2, e.nv - 1) << name;
    EXPECT_EQ(branch, 1) << name;
  }
}

TEST(Roots, FiniteCounts) {
  const std::vector<std::pair<std::string, size_t>> n = {{"A2", 3}, {"A3", 6}, {"A5", 15}, {"D4", 12},
                                                         {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [name, count] : n) {
    DynkinType t = parse_type(name);
    EXPECT_EQ(positive_roots_by_height(t, 100).size(), count) << name;
  }
}

TEST(Roots, AffineRealRootsArePsiPlusMultiples) {
  DynkinType t = parse_type("D4~");
  auto psi = psi_roots(t);
  for (const RootVec& a : psi) EXPECT_TRUE(is_real_root(t, a));
  // Psi has 2|Phi_fin+| + rank - ... : every real root of height <= 2 ht(alpha0) comes from Psi.
  std::set<RootVec> from_psi;
  for (const RootVec& a : roots_up_to(t, 1)) from_psi.insert(a);
  for (const RootVec& a : positive_roots_by_height(t, 6)) EXPECT_TRUE(from_psi.count(a));
  EXPECT_FALSE(is_real_root(t, t.alpha0));
}

TEST(Weyl, GroupOrdersAndWords) {
  for (auto [name, order] : std::vector<std::pair<std::string, size_t>>{{"A2", 6}, {"A3", 24}, {"D4", 192}}) {
    DynkinType t = parse_type(name);
    auto all = weyl_enumerate(t, 100);
    EXPECT_EQ(all.size(), order) << name;
    for (const auto& w : all) {
      EXPECT_EQ(word_matrix(t, w.word), w.matrix);
      EXPECT_EQ(inversion_set(t, w.word).size(), w.word.size());
    }
  }
}

TEST(Weyl, ReflectionsAreInvolutions) {
  DynkinType t = parse_type("E6~");
  for (int i = 0; i < t.nv; ++i) {
    IntMatrix s = reflection_matrix(t, i);
    EXPECT_EQ(mat_mul(s, s), identity_matrix(t.nv));
  }
}

TEST(Weyl, SigmaOnMonomialsTracksHeight) {
  DynkinType t = parse_type("A3~");
  Exp nu = {1, 0, 2, 0};
  for (int i = 0; i < t.nv; ++i) {
    XMonomialImage img = sigma_on_x_monomial(t, i, nu);
    EXPECT_EQ(img.nu, simple_reflect(t, i, nu));
    EXPECT_EQ(img.shift2, height(img.nu) - height(nu));
  }
}

TEST(Bipartitions, ClassesAndHeights) {
  DynkinType t = parse_type("D4~");
  auto bs = bipartitions(t);
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_EQ(bs[0].label(), "S={1,2,4,5}");
  EXPECT_EQ(bs[1].label(), "S={3}");
  EXPECT_EQ(bs[0].hS(t), 4);
  EXPECT_EQ(bs[1].hS(t), 2);
  EXPECT_THROW(bipartition_from_S(t, {1, 3}), UsageError);
}

TEST(Orbits, ExceptionalRoots) {
  DynkinType t = parse_type("A3~");
  Bipartition b = bipartitions(t)[0];  // S = {1,3}
  RootVec a = t.alpha0;
  a[1] += 1;  // alpha0 + e_2, vertex 2 in T
  EXPECT_TRUE(is_exceptional(t, b, a));
  OrbitClass oc = orbit_class(t, b, {1, 0, 0, 0});
  EXPECT_FALSE(oc.exceptional);
  EXPECT_FALSE(oc.members.empty());
}
