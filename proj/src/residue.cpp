#include "amds/residue.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "amds/tau.hpp"

namespace amds {

Exp extend_index(const DynkinType& t, const Bipartition& b, const Exp& aS) {
  Exp full(t.nv, 0);
  for (size_t k = 0; k < b.S.size(); ++k) full[b.S[k]] = aS[k];
  for (int i : b.T) full[i] = t.A(full, i);
  return full;
}

int residue_bound(const DynkinType& t, int B) {
  int nmax = 0;
  for (int i = 0; i < t.nv; ++i) nmax = std::max(nmax, t.N(i));
  return B / (1 + nmax);
}

int s_weight2(const DynkinType& t, const Bipartition& b, const Exp& nuS) {
  int s = 0;
  for (size_t k = 0; k < b.S.size(); ++k) s += (2 - t.N(b.S[k])) * nuS[k];
  return s;
}

namespace {

// sum_{i in S} a_i N(i)
int n_weight(const DynkinType& t, const Bipartition& b, const Exp& aS) {
  int s = 0;
  for (size_t k = 0; k < b.S.size(); ++k) s += aS[k] * t.N(b.S[k]);
  return s;
}

bool parity_ok(const Bipartition& b, const Exp& full) {
  for (int i : b.T)
    if (full[i] % 2 != 0) return false;
  return true;
}

}  // namespace

TruncSeries residue_from_table(const CoeffTable& table, const Bipartition& b, int bound) {
  const DynkinType& t = table.type;
  if (bound > residue_bound(t, table.bound)) throw UsageError("residue degree exceeds table bound");
  const int ns = static_cast<int>(b.S.size());
  TruncSeries r(ns, bound);
  for (const Exp& aS : indices_up_to(ns, bound)) {
    Exp full = extend_index(t, b, aS);
    if (!parity_ok(b, full)) continue;
    QLaurent c = table.at(full);
    if (!c.is_zero()) r.add(aS, c.shifted(-2 * n_weight(t, b, aS)));
  }
  return r;
}

TruncSeries residue_from_table(const CoeffTable& table, const Bipartition& b) {
  return residue_from_table(table, b, residue_bound(table.type, table.bound));
}

TruncSeries residue_on_demand(Reducer& red, const Bipartition& b, const DiagonalSpec& d, int bound) {
  const DynkinType& t = red.type();
  const int ns = static_cast<int>(b.S.size());
  TruncSeries r(ns, bound);
  for (const Exp& aS : indices_up_to(ns, bound)) {
    Exp full = extend_index(t, b, aS);
    if (!parity_ok(b, full)) continue;
    QLaurent c = evaluate(red.reduce(full), d);
    if (!c.is_zero()) r.add(aS, c.shifted(-2 * n_weight(t, b, aS)));
  }
  return r;
}

ZetaProduct r0_product(const DynkinType& t, const Bipartition& b, int B) {
  const int ns = static_cast<int>(b.S.size());
  ZetaProduct p(ns);
  // A root alpha + m alpha0 has S-degree at least m ht(alpha0|_S).
  int m_max = t.affine ? B / b.hS(t) + 1 : 0;
  std::set<RootVec> done;
  for (const RootVec& a : roots_up_to(t, m_max)) {
    Exp aS = b.restrict_S(a);
    if (is_zero_vec(aS)) continue;
    if (done.count(a)) continue;
    OrbitClass oc = orbit_class(t, b, a);
    for (const RootVec& m : oc.members) done.insert(m);
    if (oc.exceptional) continue;
    int s2 = s_weight2(t, b, aS);
    if (oc.t == 0) {
      if (total_degree(aS) > B) continue;
      if (s2 % 2 != 0) throw InternalError("half-integral weight in a t=0 orbit");
      p.add(s2 / 2 + 1, aS, 1);
    } else {
      Exp nu = aS;
      for (int& v : nu) v *= 2;
      if (total_degree(nu) > B) continue;
      for (int u = 0; u < oc.t; ++u) p.add(s2 - oc.t + 2 * u + 2, nu, binom(oc.t - 1, u));
    }
  }
  return p;
}

int r1_odd_lambda(const DynkinType& t, const Bipartition& b) {
  if (!t.affine) throw UsageError("no conjectured R_1 for finite types");
  auto bips = bipartitions(t);
  bool first = b.S == bips[0].S;
  switch (t.family) {
    case Family::A:
      return 1;
    case Family::D:
      if (t.rank % 2 == 1) return 1;
      return first ? 0 : 3;
    case Family::E:
      if (t.rank == 6) return first ? 0 : 1;
      if (t.rank == 7) return first ? 0 : 2;
      return first ? 1 : 0;
  }
  throw UsageError("untabulated type");
}

ZetaProduct r1_closed_form(const DynkinType& t, const Bipartition& b, int B) {
  int lam = r1_odd_lambda(t, b);
  const int hS = b.hS(t), d = hS - b.hT(t);
  const Exp dir = b.restrict_S(t.alpha0);
  ZetaProduct p(static_cast<int>(b.S.size()));
  int T = static_cast<int>(b.T.size());
  for (int k = 1; k * hS <= B; ++k) {
    Exp nu = dir;
    for (int& v : nu) v *= k;
    int l = k % 2 == 0 ? T : lam;
    p.add(k * d, nu, l);
    p.add(k * d + 2, nu, l);
  }
  return p;
}

ZetaProduct a_closed_form(int n, int B) {
  if (n < 3 || n % 2 == 0) throw UsageError("closed form needs odd n >= 3");
  const int K = (n + 1) / 2;
  ZetaProduct p(K);
  auto add_pair = [&](const Exp& nu, Int lam) {
    if (total_degree(nu) > B) return;
    p.add(0, nu, lam);
    p.add(2, nu, lam);
  };
  for (int m = 0; K * 2 * m <= B; ++m) {
    add_pair(Exp(K, 2 * m + 1), 1);
    for (int start = 0; start < K; ++start)
      for (int len = 1; len < K; ++len) {
        Exp nu(K, 2 * m);
        for (int r = 0; r < len; ++r) nu[(start + r) % K] += 2;
        add_pair(nu, 1);
      }
    add_pair(Exp(K, 2 * m + 2), K);
  }
  return p;
}

ZetaProduct r_flat(int n, int B) {
  ZetaProduct full = a_closed_form(n, B), out(full.nvars());
  for (const ZetaFactor& f : full.factors())
    if (f.mu2 == 0) out.add(0, f.nu, f.lambda);
  return out;
}

TruncSeries r_flat_diag(int n, int B) {
  const int K = (n + 1) / 2;
  TruncSeries s = expand(r_flat(n, B * K), B * K);
  return diagonal_part(s, Exp(K, 1)).with_bound(B);
}

Int partition_count(int n, int a) {
  if (n < 3 || n % 2 == 0) throw UsageError("partition_count needs odd n >= 3");
  const int K = (n + 1) / 2;
  if (a == 0) return 1;
  Int count = 0;
  std::vector<int> S(K, 0);
  // Level j contributes d_k^{(j)} to S_{(k+j) mod K}; parts shrink level to level.
  std::function<void(int, const std::vector<int>&)> level = [&](int j, const std::vector<int>& prev) {
    std::vector<int> cur(K, 0);
    std::function<void(int, int)> pick = [&](int k, int parity) {
      if (k == K) {
        if (std::all_of(cur.begin(), cur.end(), [](int v) { return v == 0; })) return;
        if (std::all_of(S.begin(), S.end(), [&](int v) { return v == a; })) {
          ++count;
          return;
        }
        level(j + 1, cur);
        return;
      }
      int slot = (k + j) % K;
      for (int v = parity; v <= prev[k] && S[slot] + v <= a; v += 2) {
        cur[k] = v;
        S[slot] += v;
        pick(k + 1, parity);
        S[slot] -= v;
      }
      cur[k] = 0;
    };
    pick(0, 0);
    pick(0, 1);
  };
  level(0, std::vector<int>(K, a));
  return count;
}

bool symmetry_check(const ZetaProduct& p, const DynkinType& t, const Bipartition& b) {
  for (const ZetaFactor& f : p.factors()) {
    int partner = 2 - f.mu2 + s_weight2(t, b, f.nu);
    if (p.lambda(partner, f.nu) != f.lambda) return false;
  }
  return true;
}

bool TauReport::ok() const {
  return std::all_of(generators.begin(), generators.end(), [](const TauCheck& c) { return c.ok(); });
}

namespace {

IntMatrix s_block(const IntMatrix& W, const Bipartition& b) {
  IntMatrix M(b.S.size(), std::vector<int>(b.S.size()));
  for (size_t r = 0; r < b.S.size(); ++r)
    for (size_t c = 0; c < b.S.size(); ++c) M[r][c] = W[b.S[r]][b.S[c]];
  return M;
}

struct Normalized {
  int sign = 1;
  long long q_half = 0;
  Exp x;
  ZetaProduct rest;
  bool mixed = false;
  bool operator==(const Normalized& o) const {
    return sign == o.sign && q_half == o.q_half && x == o.x && rest == o.rest && mixed == o.mixed;
  }
};

// Rewrites (1 - q^mu x^nu)^{-l} with nu <= 0 as
// (-1)^l q^{-mu l} x^{-nu l} (1 - q^{-mu} x^{-nu})^{-l}.
Normalized normalize(const ZetaProduct& p) {
  Normalized n;
  n.x.assign(p.nvars(), 0);
  n.rest = ZetaProduct(p.nvars());
  for (const ZetaFactor& f : p.factors()) {
    if (is_nonneg(f.nu)) {
      n.rest.add(f.mu2, f.nu, f.lambda);
      continue;
    }
    if (!is_nonpos(f.nu)) {
      n.mixed = true;
      n.rest.add(f.mu2, f.nu, f.lambda);
      continue;
    }
    long long l = static_cast<long long>(f.lambda);
    if (l % 2 != 0) n.sign = -n.sign;
    n.q_half -= static_cast<long long>(f.mu2) * l;
    for (size_t k = 0; k < f.nu.size(); ++k) n.x[k] -= f.nu[k] * static_cast<int>(l);
    Exp neg = f.nu;
    for (int& v : neg) v = -v;
    n.rest.add(-f.mu2, neg, f.lambda);
  }
  return n;
}

// tau(x^nu) = q^{(s(M nu) - s(nu))/4} x^{M nu}, s = s_weight2; returns the
// q-shift in half-steps.
int tau_shift(const DynkinType& t, const Bipartition& b, const Exp& nu, const Exp& img) {
  return (s_weight2(t, b, img) - s_weight2(t, b, nu)) / 2;
}

// R_0(x) / R_0(tau x) restricted to factors of S-degree <= B.
ZetaProduct computed_cocycle(const DynkinType& t, const Bipartition& b, const ZetaProduct& r0, const IntMatrix& M,
                             const IntMatrix& Minv, int B) {
  ZetaProduct c(r0.nvars());
  for (const ZetaFactor& f : r0.factors()) {
    if (total_degree(f.nu) > B) continue;
    Exp img = mat_apply(M, f.nu);
    if (!is_nonneg(img)) c.add(f.mu2 + tau_shift(t, b, f.nu, img), img, -f.lambda);
    Exp pre = mat_apply(Minv, f.nu);
    if (!is_nonneg(pre)) c.add(f.mu2, f.nu, f.lambda);
  }
  return c;
}

}  // namespace

TauReport tau_orbit_check(const DynkinType& t, const Bipartition& b, int B) {
  TauReport rep;
  const int hS = b.hS(t);
  // Preimages of factors of degree <= B can have degree up to a few
  // multiples of B; a generous bound keeps the lookups complete.
  ZetaProduct r0 = r0_product(t, b, B + 2 * hS);

  std::vector<IntMatrix> Tgroup{identity_matrix(t.nv)};
  for (int i : b.T) {
    std::vector<IntMatrix> more;
    for (const IntMatrix& g : Tgroup) more.push_back(mat_mul(g, reflection_matrix(t, i)));
    Tgroup.insert(Tgroup.end(), more.begin(), more.end());
  }

  for (const TauGenerator& g : tau_generators(t, b)) {
    TauCheck c;
    c.name = g.name;
    std::ostringstream why;
    IntMatrix W = word_matrix(t, g.word);
    std::vector<int> rev(g.word.rbegin(), g.word.rend());
    IntMatrix Winv = word_matrix(t, rev);
    for (int s : b.S)
      for (int u : b.T)
        if (W[s][u] != 0) c.block_ok = false;
    if (!c.block_ok) why << "w does not preserve span(T); ";
    for (int i : b.T) {
      IntMatrix conj = mat_mul(mat_mul(W, reflection_matrix(t, i)), Winv);
      if (std::find(Tgroup.begin(), Tgroup.end(), conj) == Tgroup.end()) c.normalizer_ok = false;
    }
    if (!c.normalizer_ok) why << "w does not normalize W_T; ";
    IntMatrix M = s_block(W, b), Minv = s_block(Winv, b);
    if (!g.images.empty()) {
      for (size_t k = 0; k < b.S.size(); ++k)
        for (size_t r = 0; r < b.S.size(); ++r)
          if (g.images[k][r] != M[r][k]) c.images_ok = false;
      if (!c.images_ok) why << "transcribed substitution differs from w; ";
    }
    for (const ZetaFactor& f : r0.factors()) {
      if (total_degree(f.nu) > B) continue;
      Exp img = mat_apply(M, f.nu);
      if (!is_nonneg(img) || total_degree(img) > B) continue;
      if (r0.lambda(f.mu2 + tau_shift(t, b, f.nu, img), img) != f.lambda) {
        c.permutation_ok = false;
        why << "factor not permuted; ";
        break;
      }
    }
    ZetaProduct c1 = computed_cocycle(t, b, r0_product(t, b, B), M, Minv, B);
    ZetaProduct c2 = computed_cocycle(t, b, r0, M, Minv, B + 2 * hS);
    c.stable = c1 == c2;
    if (!c.stable) why << "cocycle depends on the bound; ";
    c.computed = c2;
    if (g.has_cocycle) {
      c.cocycle_checked = true;
      Normalized a = normalize(c2), e = normalize(g.cocycle);
      c.cocycle_ok = a == e && !a.mixed;
      if (!c.cocycle_ok) why << "cocycle computed " << c2.str() << " expected " << g.cocycle.str() << "; ";
    }
    c.detail = why.str();
    rep.generators.push_back(std::move(c));
  }
  return rep;
}

}  // namespace amds
