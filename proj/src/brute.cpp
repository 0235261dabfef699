#include "amds/brute.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace amds {

BruteContext::BruteContext(int q, const CoeffTable& table, int max_deg)
    : F_(q), t_(table.type), max_deg_(max_deg), local_(local_weights(table)), local_bound_(table.bound) {
  if (q % 4 != 1) throw UsageError("brute force needs q = 1 mod 4");
  std::map<FieldPoly, int> ids;
  fact_.resize(max_deg + 1);
  for (int d = 0; d <= max_deg; ++d) {
    int64_t n = static_cast<int64_t>(ipow(q, d));
    fact_[d].resize(n);
    for (int64_t k = 0; k < n; ++k) {
      Factorization fz = factor(F_, monic_from_rank(F_, d, k));
      FactorList& out = fact_[d][k];
      for (const auto& [p, e] : fz.factors) {
        auto it = ids.find(p);
        if (it == ids.end()) {
          it = ids.emplace(p, static_cast<int>(primes_.size())).first;
          primes_.push_back(p);
        }
        out.push_back({it->second, e});
      }
      std::sort(out.begin(), out.end());
    }
  }
}

Int BruteContext::local_weight(const Exp& v, int d) const {
  if (total_degree(v) > local_bound_) throw UsageError("brute force needs a larger coefficient table");
  auto it = local_.find(v);
  if (it == local_.end()) return 0;
  return it->second.eval_poly(ipow(F_.q(), d));
}

int BruteContext::chi(int p, int p2) const { return chi_prime(F_, primes_[p], primes_[p2]); }

Int global_weight(const BruteContext& ctx, const std::vector<const BruteContext::FactorList*>& f) {
  const DynkinType& t = ctx.type();
  std::map<int, Exp> val;
  for (int i = 0; i < t.nv; ++i)
    for (auto [p, e] : *f[i]) {
      auto it = val.find(p);
      if (it == val.end()) it = val.emplace(p, Exp(t.nv, 0)).first;
      it->second[i] += e;
    }
  Int h = 1;
  for (const auto& [p, v] : val) {
    Int w = ctx.local_weight(v, ctx.prime_degree(p));
    if (w == 0) return 0;
    h = mul_checked(h, w);
  }
  int sign = 1;
  for (int i = 0; i < t.nv; ++i)
    for (int j : t.adj[i]) {
      if (j < i) continue;
      for (auto [p, e] : *f[i])
        for (auto [p2, e2] : *f[j])
          if (p != p2 && (e * e2) % 2 == 1) sign *= ctx.chi(p, p2);
    }
  return sign < 0 ? -h : h;
}

Int global_weight(const BruteContext& ctx, const std::vector<FieldPoly>& polys) {
  const FiniteField& F = ctx.field();
  std::vector<BruteContext::FactorList> lists;
  for (const FieldPoly& f : polys) {
    if (f.degree() > ctx.max_deg()) throw UsageError("polynomial degree above the precomputed range");
    lists.push_back(ctx.factors(f.degree(), monic_rank(F, f)));
  }
  std::vector<const BruteContext::FactorList*> ptr;
  for (const auto& l : lists) ptr.push_back(&l);
  return global_weight(ctx, ptr);
}

namespace {

int64_t tuple_count(const BruteContext& ctx, const std::vector<int>& degs) {
  int64_t n = 1;
  for (int d : degs) {
    if (d > ctx.max_deg()) throw UsageError("degree above the precomputed range");
    n *= ctx.count(d);
  }
  return n;
}

Int coeff_term(const BruteContext& ctx, const Exp& a, int64_t idx) {
  const int nv = static_cast<int>(a.size());
  std::vector<const BruteContext::FactorList*> f(nv);
  for (int i = nv - 1; i >= 0; --i) {
    int64_t c = ctx.count(a[i]);
    f[i] = &ctx.factors(a[i], idx % c);
    idx /= c;
  }
  return global_weight(ctx, f);
}

// Tuples over S; zero unless every f'_t is a square.
Int square_term(const BruteContext& ctx, const Bipartition& b, const Exp& aS, int64_t idx) {
  const DynkinType& t = ctx.type();
  std::vector<const BruteContext::FactorList*> f(t.nv);
  for (int k = static_cast<int>(b.S.size()) - 1; k >= 0; --k) {
    int64_t c = ctx.count(aS[k]);
    f[b.S[k]] = &ctx.factors(aS[k], idx % c);
    idx /= c;
  }
  std::vector<BruteContext::FactorList> merged(t.nv);
  for (int u : b.T) {
    std::map<int, int> m;
    for (int j : t.adj[u])
      for (auto [p, e] : *f[j]) m[p] += e;
    for (auto [p, e] : m) {
      if (e % 2 != 0) return 0;
      merged[u].push_back({p, e});
    }
    f[u] = &merged[u];
  }
  return global_weight(ctx, f);
}

template <class Fn>
Int parallel_sum(int64_t n, Fn fn) {
  Int total = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    Int local = 0;
#pragma omp for schedule(dynamic, 256) nowait
    for (int64_t k = 0; k < n; ++k) local = add_checked(local, fn(k));
#pragma omp critical
    total = add_checked(total, local);
  }
#else
  for (int64_t k = 0; k < n; ++k) total = add_checked(total, fn(k));
#endif
  return total;
}

}  // namespace

Int brute_force_coeff(const BruteContext& ctx, const Exp& a) {
  int64_t n = tuple_count(ctx, a);
  return parallel_sum(n, [&](int64_t k) { return coeff_term(ctx, a, k); });
}

Int brute_force_coeff_serial(const BruteContext& ctx, const Exp& a) {
  int64_t n = tuple_count(ctx, a);
  Int total = 0;
  for (int64_t k = 0; k < n; ++k) total = add_checked(total, coeff_term(ctx, a, k));
  return total;
}

namespace {

void require_square_range(const BruteContext& ctx, const Bipartition& b, const Exp& aS) {
  const DynkinType& t = ctx.type();
  Exp full(t.nv, 0);
  for (size_t k = 0; k < b.S.size(); ++k) full[b.S[k]] = aS[k];
  for (int u : b.T)
    if (t.A(full, u) > ctx.max_deg()) throw UsageError("degree above the precomputed range");
}

}  // namespace

Int residue_square_sum_raw(const BruteContext& ctx, const Bipartition& b, const Exp& aS) {
  require_square_range(ctx, b, aS);
  int64_t n = tuple_count(ctx, aS);
  return parallel_sum(n, [&](int64_t k) { return square_term(ctx, b, aS, k); });
}

Int residue_square_sum_raw_serial(const BruteContext& ctx, const Bipartition& b, const Exp& aS) {
  require_square_range(ctx, b, aS);
  int64_t n = tuple_count(ctx, aS);
  Int total = 0;
  for (int64_t k = 0; k < n; ++k) total = add_checked(total, square_term(ctx, b, aS, k));
  return total;
}

Rational residue_square_sum(const BruteContext& ctx, const Bipartition& b, const Exp& aS) {
  Int raw = residue_square_sum_raw(ctx, b, aS);
  int w = 0;
  for (size_t k = 0; k < b.S.size(); ++k) w += ctx.type().N(b.S[k]) * aS[k];
  if (raw == 0) return Rational(0);
  if (w % 2 != 0) throw InternalError("square sum has a half-integral q-power");
  Rational r(to_string(raw));
  Rational d(to_string(ipow(ctx.q(), w / 2)));
  return r / d;
}

Rational eval_at(const QLaurent& c, int q) {
  auto [num, den_exp] = c.eval_rational(q);
  return Rational(to_string(num)) / Rational(to_string(ipow(q, den_exp)));
}

}  // namespace amds
