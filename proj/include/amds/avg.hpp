#pragma once

#include <map>
#include <utility>
#include <vector>

#include "amds/mdsbuild.hpp"
#include "amds/rootsys.hpp"
#include "amds/series.hpp"

namespace amds {

using LaurentPoly = std::map<Exp, QLaurent>;

// num / prod (1 - q^{c/2} x^gamma) with each gamma >= 0.
struct AvgFraction {
  LaurentPoly num;
  std::vector<std::pair<int, Exp>> den;
  static AvgFraction one(int nv);
  static AvgFraction poly(const LaurentPoly& p);
  bool operator==(const AvgFraction& o) const { return num == o.num && den == o.den; }
};

// f(sigma_i x) for a Laurent polynomial, with the q-twisted reflection.
LaurentPoly sigma_substitute(const DynkinType& t, const LaurentPoly& f, int i);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

// (f | sigma_i) = (1 - x_i^{-1})(1 - q x_i)^{-1} f_+(sigma_i x) + q^{-1/2} x_i^{-1} f_-(sigma_i x),
// f_+ and f_- the parts even and odd under x_j -> -x_j for all j ~ i.
AvgFraction apply_sigma_op(const DynkinType& t, const AvgFraction& f, int i);

// Cancels denominator factors that divide the numerator exactly.
void cancel_common(AvgFraction& f);

// Division of p by (1 - q^{c/2} x^gamma); false when not exact.
bool divide_binomial(const LaurentPoly& p, int c, const Exp& gamma, LaurentPoly& quotient);

struct WeylDenominators {
  TruncSeries D;      // prod (1 - q^{ht+1} x^{2 alpha})
  TruncSeries Delta;  // prod (1 - q^{ht} x^{2 alpha})
};
// Products over positive real roots with 2 ht(alpha) <= B.
WeylDenominators weyl_denominators(const DynkinType& t, int B);

struct AvgResult {
  TruncSeries z;
  int elements = 0;       // Weyl elements summed
  int max_length = 0;
  bool no_negative = true;     // x^{2 rho_w} N_w is a polynomial for every w
  bool certificate_ok = true;  // each summand starts in degree >= ht(rho_w)
};

// sum_w Delta(w x)^{-1} (1|w)(x) up to total degree B. Elements with
// ht(rho_w) > B are skipped; rho_w grows under left multiplication.
AvgResult z_avg(const DynkinType& t, int B);

TruncSeries table_series(const CoeffTable& table);
CoeffTable series_table(const DynkinType& t, const TruncSeries& s);

struct RatioCheck {
  bool diagonal = false;
  TruncSeries ratio;
};
// Z * Zavg^{-1} has only terms at multiples of alpha0 (or only the constant, finite types).
RatioCheck ratio_diagonal_check(const CoeffTable& Z, const TruncSeries& zavg);

}  // namespace amds
