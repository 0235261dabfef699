#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "amds/qlaurent.hpp"

namespace amds {

using Exp = std::vector<int>;

inline int total_degree(const Exp& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Graded order: total degree first, then lexicographic. Used wherever
// processing order matters (factorization, serialization).
struct GradedLess {
  bool operator()(const Exp& a, const Exp& b) const {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

struct WindowOverflow : InternalError {
  using InternalError::InternalError;
};

// Truncated multivariate Laurent series over Z[q^{+-1/2}].
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(int nvars, int bound, int neg_window = 0)
      : nvars_(nvars), bound_(bound), window_(neg_window) {}
  static TruncSeries one(int nvars, int bound);
  static TruncSeries monomial(int nvars, int bound, const Exp& e, const QLaurent& c);

  int nvars() const { return nvars_; }
  int bound() const { return bound_; }
  int window() const { return window_; }
  const std::map<Exp, QLaurent, GradedLess>& terms() const { return terms_; }

  bool in_range(const Exp& e) const;
  // Adds c at e. Terms above the bound are dropped (truncation); terms
  // below the negative window raise WindowOverflow.
  void add(const Exp& e, const QLaurent& c);
  QLaurent coeff(const Exp& e) const;
  void set(const Exp& e, const QLaurent& c);

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const QLaurent& c) const;
  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  TruncSeries with_bound(int b) const;
  // Requires constant term +-q^{k/2} and no negative exponents.
  TruncSeries inverse() const;
  // Multiply each term by its total degree (Euler operator).
  TruncSeries euler_operator() const;
  bool has_negative_exponent() const;

  std::string str() const;

 private:
  int nvars_ = 0;
  int bound_ = 0;
  int window_ = 0;
  std::map<Exp, QLaurent, GradedLess> terms_;
};

struct ZetaFactor {
  int mu2;     // q-exponent in half-steps
  Exp nu;      // nonzero, componentwise >= 0 for expandable products
  Int lambda;  // factor is (1 - q^mu x^nu)^{-lambda}
  bool operator==(const ZetaFactor& o) const {
    return mu2 == o.mu2 && nu == o.nu && lambda == o.lambda;
  }
};

// Finite product of factors (1 - q^mu x^nu)^{-lambda}, merged on (mu, nu).
class ZetaProduct {
 public:
  ZetaProduct() = default;
  explicit ZetaProduct(int nvars) : nvars_(nvars) {}
  int nvars() const { return nvars_; }
  void add(int mu2, const Exp& nu, Int lambda);
  void add(const ZetaProduct& o);
  ZetaProduct inverse() const;
  Int lambda(int mu2, const Exp& nu) const;
  std::vector<ZetaFactor> factors() const;
  size_t size() const { return f_.size(); }
  bool empty() const { return f_.empty(); }
  // Only factors with total degree of nu at most b.
  ZetaProduct truncated(int b) const;
  bool operator==(const ZetaProduct& o) const { return nvars_ == o.nvars_ && f_ == o.f_; }
  bool operator!=(const ZetaProduct& o) const { return !(*this == o); }
  std::string str() const;

 private:
  struct Key {
    Exp nu;
    int mu2;
    bool operator<(const Key& o) const {
      if (nu != o.nu) return GradedLess()(nu, o.nu);
      return mu2 < o.mu2;
    }
    bool operator==(const Key& o) const { return nu == o.nu && mu2 == o.mu2; }
  };
  int nvars_ = 0;
  std::map<Key, Int> f_;
};

// Coefficient of y^k in (1 - y)^{-lambda}.
Int zeta_binomial(Int lambda, int k);

TruncSeries expand(const ZetaProduct& p, int bound);
ZetaProduct factorize(const TruncSeries& s, int bound);

// Collects terms m*direction into a one-variable series in x^m.
TruncSeries diagonal_part(const TruncSeries& s, const Exp& direction);

// Monomial substitution x^nu -> q^{shift2 . nu / 2} x^{M nu}.
struct MonomialMap {
  std::vector<std::vector<int>> matrix;  // out_vars x in_vars
  std::vector<int> shift2;               // half-steps per unit of each input exponent
  Exp apply(const Exp& nu) const;
  int shift_of(const Exp& nu) const;
};

struct SubstResult {
  TruncSeries image;
  int dropped_above_bound = 0;
};

SubstResult substitute(const TruncSeries& s, const MonomialMap& m, int out_bound, int out_window);

// Series with rational coefficients in q^{1/2}; only log/exp use it.
using Rational = boost::multiprecision::cpp_rational;
struct RatSeries {
  int nvars = 0;
  int bound = 0;
  std::map<Exp, std::map<int, Rational>, GradedLess> terms;
};

RatSeries log_rational(const TruncSeries& s);
TruncSeries exp_rational(const RatSeries& l);
bool rat_series_is_integral(const RatSeries& l);

}  // namespace amds
