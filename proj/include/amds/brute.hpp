#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "amds/fqpoly.hpp"
#include "amds/mdsbuild.hpp"
#include "amds/rootsys.hpp"
#include "amds/series.hpp"

namespace amds {

// Precomputed factorizations of every monic polynomial of degree <= max_deg,
// plus the local weights H(p^v) read from a coefficient table.
class BruteContext {
 public:
  BruteContext(int q, const CoeffTable& table, int max_deg);

  const FiniteField& field() const { return F_; }
  const DynkinType& type() const { return t_; }
  int max_deg() const { return max_deg_; }
  int q() const { return F_.q(); }

  using FactorList = std::vector<std::pair<int, int>>;  // (prime id, multiplicity)
  const FactorList& factors(int deg, int64_t rank) const { return fact_[deg][rank]; }
  int64_t count(int deg) const { return static_cast<int64_t>(fact_[deg].size()); }
  const FieldPoly& prime(int id) const { return primes_[id]; }
  int prime_degree(int id) const { return primes_[id].degree(); }

  // H at a single prime of degree d with valuation vector v.
  Int local_weight(const Exp& v, int d) const;
  int chi(int p, int p2) const;  // chi_p(p2), p != p2

 private:
  FiniteField F_;
  DynkinType t_;
  int max_deg_;
  std::map<Exp, QLaurent, GradedLess> local_;  // polynomials in P
  int local_bound_;
  std::vector<FieldPoly> primes_;
  std::vector<std::vector<FactorList>> fact_;
};

// H(f_1, ..., f_{n+1}) from factored inputs.
Int global_weight(const BruteContext& ctx, const std::vector<const BruteContext::FactorList*>& f);
// Same from explicit monic polynomials (factored on the fly).
Int global_weight(const BruteContext& ctx, const std::vector<FieldPoly>& polys);

// sum of H over monic tuples with deg f_i = a_i.
Int brute_force_coeff(const BruteContext& ctx, const Exp& a);
Int brute_force_coeff_serial(const BruteContext& ctx, const Exp& a);

// sum over monic S-tuples with prod_{j~t} f_j a square for all t in T of
// H(f') prod_{i in S} q^{-N(i) deg f_i / 2}, f'_t = prod_{j~t} f_j.
Rational residue_square_sum(const BruteContext& ctx, const Bipartition& b, const Exp& aS);
// The same sum without the q-power weight.
Int residue_square_sum_raw(const BruteContext& ctx, const Bipartition& b, const Exp& aS);
Int residue_square_sum_raw_serial(const BruteContext& ctx, const Bipartition& b, const Exp& aS);

// A QLaurent with integral exponents evaluated at q as an exact rational.
Rational eval_at(const QLaurent& c, int q);

}  // namespace amds
