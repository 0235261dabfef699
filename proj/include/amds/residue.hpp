#pragma once

#include <string>
#include <vector>

#include "amds/mdsbuild.hpp"
#include "amds/rootsys.hpp"
#include "amds/series.hpp"

namespace amds {

// Extended index a' with a'_i = a_i on S and A(i) on T.
Exp extend_index(const DynkinType& t, const Bipartition& b, const Exp& aS);

// Largest S-degree fully determined by a table of bound B.
int residue_bound(const DynkinType& t, int B);

// Residue R(x_S) read off a coefficient table.
TruncSeries residue_from_table(const CoeffTable& table, const Bipartition& b);
TruncSeries residue_from_table(const CoeffTable& table, const Bipartition& b, int bound);
// Same, computing each needed coefficient with the reducer (no table bound).
TruncSeries residue_on_demand(Reducer& red, const Bipartition& b, const DiagonalSpec& d, int bound);

// sum_{j in S} (2 - N(j)) nu_j, i.e. twice the q-weight of x^nu.
int s_weight2(const DynkinType& t, const Bipartition& b, const Exp& nuS);

// Product over W_T-orbits of positive real roots, factors with S-degree <= B.
ZetaProduct r0_product(const DynkinType& t, const Bipartition& b, int B);

// Odd-power exponent of the conjectured R_1; throws for untabulated pairs.
int r1_odd_lambda(const DynkinType& t, const Bipartition& b);
ZetaProduct r1_closed_form(const DynkinType& t, const Bipartition& b, int B);

// Closed form of the A~_n residue (n odd) in the variables x_1, x_3, ..., x_n.
ZetaProduct a_closed_form(int n, int B);
// The q-free half of a_closed_form.
ZetaProduct r_flat(int n, int B);
TruncSeries r_flat_diag(int n, int B);
Int partition_count(int n, int a);

// Factors pair off under mu -> 1 - mu + sum (1 - N/2) nu.
bool symmetry_check(const ZetaProduct& p, const DynkinType& t, const Bipartition& b);

struct TauCheck {
  std::string name;
  bool block_ok = true;        // w maps span(T) into itself
  bool normalizer_ok = true;   // w normalizes <s_t : t in T>
  bool images_ok = true;       // transcribed substitution matches w
  bool permutation_ok = true;  // nonexceptional factors are permuted
  bool stable = true;          // computed cocycle does not depend on the bound
  bool cocycle_checked = false;
  bool cocycle_ok = true;
  ZetaProduct computed;        // R_0(x) / R_0(tau x), before normalization
  std::string detail;
  bool ok() const { return block_ok && normalizer_ok && images_ok && permutation_ok && stable && cocycle_ok; }
};

struct TauReport {
  std::vector<TauCheck> generators;
  bool ok() const;
};

TauReport tau_orbit_check(const DynkinType& t, const Bipartition& b, int B);

}  // namespace amds
