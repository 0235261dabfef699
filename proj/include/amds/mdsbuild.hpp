#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "amds/qlaurent.hpp"
#include "amds/rootsys.hpp"
#include "amds/series.hpp"

namespace amds {

struct ExpHash {
  size_t operator()(const Exp& e) const {
    size_t h = 1469598103934665603ull;
    for (int v : e) h = (h ^ static_cast<size_t>(v + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

// A coefficient written as sum_m coef[m] * c_{m alpha0}.
using LinComb = std::vector<QLaurent>;

// values[m] = c_{m alpha0}; values[0] = 1.
struct DiagonalSpec {
  std::vector<QLaurent> values;
  static DiagonalSpec delta() { return {{QLaurent::one()}}; }
};

QLaurent evaluate(const LinComb& l, const DiagonalSpec& d);

// Memoized reduction of c_a to diagonal coefficients via the odd and even
// recurrences. Not thread-safe; one instance per thread.
class Reducer {
 public:
  explicit Reducer(const DynkinType& t) : t_(t) {}
  const DynkinType& type() const { return t_; }
  const LinComb& reduce(const Exp& a);
  // Apply one step at vertex i (which must be reducible), then reduce fully.
  LinComb reduce_via(const Exp& a, int i);
  // Vertex chosen by the default strategy, or -1 if a is irreducible.
  int choose(const Exp& a) const;
  size_t memo_size() const { return memo_.size(); }

 private:
  LinComb step(const Exp& a, int i);
  const DynkinType& t_;
  std::unordered_map<Exp, LinComb, ExpHash> memo_;
};

QLaurent reduce_coefficient(const DynkinType& t, const Exp& a, const DiagonalSpec& d);

struct CoeffTable {
  DynkinType type;
  int bound = 0;
  std::map<Exp, QLaurent, GradedLess> entries;
  DiagonalSpec diag;
  QLaurent at(const Exp& a) const;  // zero when absent or negative
  bool has(const Exp& a) const;
};

// Diagonal residue of the series with diagonal delta, in the variable
// x = q^{-ht(alpha0|_T)} x_S^{alpha0|_S}. Coefficient m is
// q^{-m ht(alpha0|_T)} c_{a'(m)}.
TruncSeries g_series(Reducer& red, const Bipartition& b, int M);
TruncSeries g_series(const DynkinType& t, const Bipartition& b, int M);

enum class SplitRule { LessEqual, Strict };

struct DiagonalResult {
  DiagonalSpec diag;
  TruncSeries G;
  TruncSeries r0_diag;        // R_{0,diag}(q^{hT} x)
  ZetaProduct quotient;       // factorization of G * R0diag^{-1}
  ZetaProduct z_diag;         // one variable
  ZetaProduct r1_x;           // R_1(q^{hT} x), one variable
  ZetaProduct r1_S;           // R_1 in the S variables
  bool condition_dominance = true;  // Z_diag coefficients obey the degree window
  bool condition_symmetry = true;   // R_1 factors pair off
};

// Throws InternalError("dominance/degree bound violated") when a factor of
// the quotient has mu outside (0, nu ht(alpha0)).
DiagonalResult determine_diagonal(Reducer& red, const Bipartition& b, int M, SplitRule rule = SplitRule::LessEqual);
DiagonalResult determine_diagonal(const DynkinType& t, const Bipartition& b, int M,
                                  SplitRule rule = SplitRule::LessEqual);

CoeffTable compute_table(const DynkinType& t, int B);
CoeffTable compute_table_with(const DynkinType& t, int B, const DiagonalSpec& d);

// Indices of a table in canonical order.
std::vector<Exp> indices_up_to(int nvars, int B);

// Local weights H(p^a) as polynomials in P = q^{deg p}, stored as QLaurent in P.
std::map<Exp, QLaurent, GradedLess> local_weights(const CoeffTable& table);

enum class SliceResult { Pass, Fail, Insufficient };
SliceResult fe_slice_check(const CoeffTable& table, int i, const Exp& fixed);

struct CheckReport {
  std::string name;
  int checked = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<std::string> failures;  // first few
  bool ok() const { return failed == 0; }
  void fail(const std::string& what);
};

CheckReport check_initial_conditions(const CoeffTable& table);
CheckReport check_dominance(const CoeffTable& table);
CheckReport check_degree_bound(const CoeffTable& table);
CheckReport check_recurrences(const CoeffTable& table);
CheckReport check_fe_slices(const CoeffTable& table);
CheckReport check_confluence(const DynkinType& t, int B);

struct LowestTerm {
  int degree = 0;
  Int coefficient = 0;
};
// Lowest term of p_a(q) = c_{a,2a,...,a,2a} under the delta diagonal (A~_n only).
LowestTerm p_lowest_term(Reducer& red, int a);

}  // namespace amds
