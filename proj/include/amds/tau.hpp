#pragma once

#include <string>
#include <vector>

#include "amds/rootsys.hpp"
#include "amds/series.hpp"

namespace amds {

// A functional equation R(x_S) = c(x_S) R(tau(x_S)) of the residue,
// induced by a Weyl group element normalizing <s_t : t in T>.
struct TauGenerator {
  std::string name;
  std::vector<int> word;      // 0-based generators
  std::vector<Exp> images;    // images[k]: exponent vector (over S) of tau(x)_{S[k]}
  bool has_cocycle = false;
  ZetaProduct cocycle;        // may contain factors with negative exponents
};

// Generators used to pin the residue down to a diagonal series. Empty when
// none are known (D4~ with S={3}).
std::vector<TauGenerator> tau_generators(const DynkinType& t, const Bipartition& b);

}  // namespace amds
