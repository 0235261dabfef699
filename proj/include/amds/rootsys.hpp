#pragma once

#include <string>
#include <vector>

#include "amds/series.hpp"

namespace amds {

using RootVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

enum class Family { A, D, E };

// Labeled simply-laced diagram. Vertices are 0-based internally; names and
// user-facing output use 1-based labels.
struct DynkinType {
  std::string name;
  Family family = Family::A;
  int rank = 0;  // n in A_n, D~_n, ...
  bool affine = false;
  int nv = 0;
  std::vector<std::vector<int>> adj;
  RootVec alpha0;  // affine only

  bool adjacent(int i, int j) const;
  int N(int i) const { return static_cast<int>(adj[i].size()); }
  int ht_alpha0() const;
  // Sum of a_j over neighbors j of i.
  int A(const Exp& a, int i) const;
};

DynkinType parse_type(const std::string& text);
DynkinType make_type(Family f, int rank, bool affine);

struct Bipartition {
  std::vector<int> S, T;  // sorted, 0-based
  std::vector<int> pos;   // vertex -> index within S or T
  std::vector<bool> in_S;
  std::string label() const;  // "S={1,3}"
  int hS(const DynkinType& t) const;  // ht(alpha0|_S)
  int hT(const DynkinType& t) const;
  Exp restrict_S(const Exp& full) const;
};

// The two color classes; index 0 is the class containing vertex 1.
std::vector<Bipartition> bipartitions(const DynkinType& t);
Bipartition bipartition_from_S(const DynkinType& t, const std::vector<int>& S_one_based);

int height(const RootVec& a);
RootVec simple_reflect(const DynkinType& t, int i, const RootVec& a);
IntMatrix reflection_matrix(const DynkinType& t, int i);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RootVec mat_apply(const IntMatrix& m, const RootVec& v);
IntMatrix identity_matrix(int n);

struct XMonomialImage {
  Exp nu;
  int shift2;  // q-power in half-steps
};
// x^nu -> q^{(ht(s_i nu) - ht(nu))/2} x^{s_i nu}
XMonomialImage sigma_on_x_monomial(const DynkinType& t, int i, const Exp& nu);

bool is_nonneg(const RootVec& a);
bool is_nonpos(const RootVec& a);
bool is_zero_vec(const RootVec& a);

// Positive real roots with 0 <= alpha <= alpha0 (affine) or all of Phi+ (finite).
std::vector<RootVec> psi_roots(const DynkinType& t);
// {alpha + m alpha0 : alpha in Psi, 0 <= m <= m_max}; all of Phi+ for finite types.
std::vector<RootVec> roots_up_to(const DynkinType& t, int m_max);
// Positive real roots of height <= h, sorted by height then lex.
std::vector<RootVec> positive_roots_by_height(const DynkinType& t, int h);
bool is_real_root(const DynkinType& t, const RootVec& a);

struct WeylElement {
  IntMatrix matrix;       // column j = image of e_j
  std::vector<int> word;  // 0-based generators, lexicographically smallest reduced word
  int length() const { return static_cast<int>(word.size()); }
};

std::vector<WeylElement> weyl_enumerate(const DynkinType& t, int l_max);
IntMatrix word_matrix(const DynkinType& t, const std::vector<int>& word);
// Phi(w) for the element given by a reduced word.
std::vector<RootVec> inversion_set(const DynkinType& t, const std::vector<int>& word);
std::string word_str(const std::vector<int>& word);

struct OrbitClass {
  RootVec representative;  // smallest member by height then lex
  std::vector<RootVec> members;
  int t = 0;
  bool exceptional = false;  // alpha = m alpha0 +- e_i with i in T
};

OrbitClass orbit_class(const DynkinType& t, const Bipartition& b, const RootVec& a);
bool is_exceptional(const DynkinType& t, const Bipartition& b, const RootVec& a);

}  // namespace amds
