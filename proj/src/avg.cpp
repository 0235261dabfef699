#include "amds/avg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace amds {

AvgFraction AvgFraction::one(int nv) {
  AvgFraction f;
  f.num[Exp(nv, 0)] = QLaurent::one();
  return f;
}

AvgFraction AvgFraction::poly(const LaurentPoly& p) {
  AvgFraction f;
  f.num = p;
  return f;
}

namespace {

void add_to(LaurentPoly& p, const Exp& e, const QLaurent& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

LaurentPoly monomial(const Exp& e, const QLaurent& c) {
  LaurentPoly p;
  add_to(p, e, c);
  return p;
}

Exp unit(int nv, int i, int v) {
  Exp e(nv, 0);
  e[i] = v;
  return e;
}

bool odd_at(const DynkinType& t, const Exp& nu, int i) {
  int s = 0;
  for (int j : t.adj[i]) s += nu[j];
  return s % 2 != 0;
}

Exp add_exp(Exp a, const Exp& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

}  // namespace

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(r, add_exp(ea, eb), ca * cb);
  return r;
}

LaurentPoly sigma_substitute(const DynkinType& t, const LaurentPoly& f, int i) {
  LaurentPoly r;
  for (const auto& [nu, c] : f) {
    XMonomialImage img = sigma_on_x_monomial(t, i, nu);
    add_to(r, img.nu, c.shifted(img.shift2));
  }
  return r;
}

bool divide_binomial(const LaurentPoly& p, int c, const Exp& gamma, LaurentPoly& quotient) {
  int piv = -1;
  for (size_t k = 0; k < gamma.size(); ++k)
    if (gamma[k] != 0) {
      piv = static_cast<int>(k);
      break;
    }
  if (piv < 0 || gamma[piv] < 0) throw InternalError("binomial direction must be nonnegative and nonzero");
  // Chains nu + k gamma, keyed by their base point.
  std::map<Exp, std::map<int, QLaurent>> chains;
  for (const auto& [nu, coef] : p) {
    int v = nu[piv], g = gamma[piv];
    int k = v >= 0 ? v / g : -((-v + g - 1) / g);
    Exp base = nu;
    for (size_t j = 0; j < base.size(); ++j) base[j] -= k * gamma[j];
    chains[base][k] = coef;
  }
  LaurentPoly q;
  for (const auto& [base, terms] : chains) {
    int kmin = terms.begin()->first, kmax = terms.rbegin()->first;
    QLaurent prev;
    for (int k = kmin; k <= kmax; ++k) {
      auto it = terms.find(k);
      QLaurent cur = prev.shifted(c);
      if (it != terms.end()) cur += it->second;
      if (k == kmax) {
        if (!cur.is_zero()) return false;
        break;
      }
      if (!cur.is_zero()) {
        Exp e = base;
        for (size_t j = 0; j < e.size(); ++j) e[j] += k * gamma[j];
        q.emplace(e, cur);
      }
      prev = cur;
    }
  }
  quotient = std::move(q);
  return true;
}

void cancel_common(AvgFraction& f) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t k = 0; k < f.den.size(); ++k) {
      LaurentPoly q;
      if (divide_binomial(f.num, f.den[k].first, f.den[k].second, q)) {
        f.num = std::move(q);
        f.den.erase(f.den.begin() + k);
        again = true;
        break;
      }
    }
  }
}

AvgFraction apply_sigma_op(const DynkinType& t, const AvgFraction& f, int i) {
  const int nv = t.nv;
  LaurentPoly even, odd;
  for (const auto& [nu, c] : f.num) (odd_at(t, nu, i) ? odd : even).emplace(nu, c);
  even = sigma_substitute(t, even, i);
  odd = sigma_substitute(t, odd, i);

  AvgFraction r;
  LaurentPoly mult = monomial(Exp(nv, 0), QLaurent::one());
  bool flipped = false;
  for (const auto& [c, g] : f.den) {
    XMonomialImage img = sigma_on_x_monomial(t, i, g);
    int c2 = c + img.shift2;
    if (is_nonneg(img.nu)) {
      r.den.push_back({c2, img.nu});
    } else if (is_nonpos(img.nu)) {
      // 1 / (1 - q^{c2/2} x^{-d}) = -q^{-c2/2} x^d / (1 - q^{-c2/2} x^d)
      Exp d = img.nu;
      for (int& v : d) v = -v;
      mult = poly_mul(mult, monomial(d, QLaurent::monomial(-1, -c2)));
      r.den.push_back({-c2, d});
      flipped = true;
    } else {
      throw InternalError("reflection produced a mixed-sign denominator");
    }
  }

  // (1 - x_i^{-1})(1 + q x_i) and q^{-1/2} x_i^{-1} (1 - q^2 x_i^2)
  LaurentPoly ke, ko;
  add_to(ke, Exp(nv, 0), QLaurent::one() - QLaurent::q_pow(1));
  add_to(ke, unit(nv, i, -1), QLaurent(-1));
  add_to(ke, unit(nv, i, 1), QLaurent::q_pow(1));
  add_to(ko, unit(nv, i, -1), QLaurent::monomial(1, -1));
  add_to(ko, unit(nv, i, 1), QLaurent::monomial(-1, 3));

  LaurentPoly num = poly_mul(even, ke);
  for (const auto& [e, c] : poly_mul(odd, ko)) add_to(num, e, c);
  r.num = poly_mul(num, mult);
  r.den.push_back({4, unit(nv, i, 2)});
  if (flipped) cancel_common(r);
  return r;
}

WeylDenominators weyl_denominators(const DynkinType& t, int B) {
  ZetaProduct d(t.nv), delta(t.nv);
  for (const RootVec& a : positive_roots_by_height(t, B / 2)) {
    Exp g = a;
    for (int& v : g) v *= 2;
    d.add(2 * (height(a) + 1), g, -1);
    delta.add(2 * height(a), g, -1);
  }
  return {expand(d, B), expand(delta, B)};
}

namespace {

struct Elem {
  IntMatrix winv;
  std::vector<RootVec> phi;
  RootVec rho;
  int rho_ht = 0;
};

std::vector<int> lex_min_word(const DynkinType& t, IntMatrix cur) {
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < t.nv && pick < 0; ++i) {
      RootVec col(t.nv);
      for (int r = 0; r < t.nv; ++r) col[r] = cur[r][i];
      if (!is_nonneg(col)) pick = i;
    }
    if (pick < 0) return word;
    word.push_back(pick);
    cur = mat_mul(cur, reflection_matrix(t, pick));
  }
}

}  // namespace

AvgResult z_avg(const DynkinType& t, int B) {
  const int nv = t.nv;
  AvgResult res;
  std::vector<IntMatrix> refl;
  for (int i = 0; i < nv; ++i) refl.push_back(reflection_matrix(t, i));

  std::vector<Elem> elems;
  std::set<IntMatrix> seen;
  std::deque<Elem> queue;
  Elem id;
  id.winv = identity_matrix(nv);
  id.rho.assign(nv, 0);
  queue.push_back(id);
  seen.insert(id.winv);
  while (!queue.empty()) {
    Elem e = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < nv; ++i) {
      RootVec col(nv);
      for (int r = 0; r < nv; ++r) col[r] = e.winv[r][i];
      if (!is_nonneg(col)) continue;
      int ht = e.rho_ht + height(col);
      if (ht > B) continue;
      IntMatrix w2 = mat_mul(e.winv, refl[i]);
      if (!seen.insert(w2).second) continue;
      Elem n;
      n.winv = std::move(w2);
      n.phi = e.phi;
      n.phi.push_back(col);
      n.rho = add_exp(e.rho, col);
      n.rho_ht = ht;
      queue.push_back(std::move(n));
    }
    elems.push_back(std::move(e));
  }

  std::map<std::vector<int>, AvgFraction> memo;
  memo[{}] = AvgFraction::one(nv);
  auto frac = [&](const std::vector<int>& word) -> const AvgFraction& {
    size_t k = word.size();
    while (!memo.count(std::vector<int>(word.begin(), word.begin() + k))) --k;
    for (; k < word.size(); ++k) {
      std::vector<int> pre(word.begin(), word.begin() + k);
      AvgFraction next = apply_sigma_op(t, memo.at(pre), word[k]);
      pre.push_back(word[k]);
      memo.emplace(pre, std::move(next));
    }
    return memo.at(word);
  };

  TruncSeries sum(nv, B);
  for (const Elem& e : elems) {
    std::vector<int> word = lex_min_word(t, e.winv);
    const AvgFraction& f = frac(word);
    ++res.elements;
    res.max_length = std::max(res.max_length, static_cast<int>(word.size()));

    std::vector<std::pair<int, Exp>> expect;
    for (const RootVec& a : e.phi) {
      Exp g = a;
      for (int& v : g) v *= 2;
      expect.push_back({2 * (height(a) + 1), g});
    }
    std::vector<std::pair<int, Exp>> got = f.den;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got) throw InternalError("(1|w) denominator differs from the inversion set");

    Exp shift = e.rho;
    for (int& v : shift) v *= 2;
    QLaurent scale = QLaurent::monomial(word.size() % 2 == 0 ? 1 : -1, 2 * e.rho_ht);
    TruncSeries part(nv, B);
    bool neg = false;
    for (const auto& [nu, c] : f.num) {
      Exp x = add_exp(nu, shift);
      if (!is_nonneg(x)) {
        neg = true;
        continue;
      }
      if (total_degree(x) < e.rho_ht) res.certificate_ok = false;
      part.add(x, c * scale);
    }
    if (neg) res.no_negative = false;
    ZetaProduct den(nv);
    for (const auto& [c, g] : f.den) den.add(c, g, 1);
    sum += part * expand(den, B);
  }

  ZetaProduct delta_inv(nv);
  for (const RootVec& a : positive_roots_by_height(t, B / 2)) {
    Exp g = a;
    for (int& v : g) v *= 2;
    delta_inv.add(2 * height(a), g, 1);
  }
  res.z = sum * expand(delta_inv, B);
  return res;
}

TruncSeries table_series(const CoeffTable& table) {
  TruncSeries s(table.type.nv, table.bound);
  for (const auto& [a, c] : table.entries) s.add(a, c);
  return s;
}

CoeffTable series_table(const DynkinType& t, const TruncSeries& s) {
  CoeffTable tab;
  tab.type = t;
  tab.bound = s.bound();
  for (const auto& [a, c] : s.terms())
    if (!c.is_zero()) tab.entries.emplace(a, c);
  return tab;
}

RatioCheck ratio_diagonal_check(const CoeffTable& Z, const TruncSeries& zavg) {
  const DynkinType& t = Z.type;
  int B = std::min(Z.bound, zavg.bound());
  RatioCheck r;
  r.ratio = table_series(Z).with_bound(B) * zavg.with_bound(B).inverse();
  r.diagonal = true;
  for (const auto& [e, c] : r.ratio.terms()) {
    if (c.is_zero() || is_zero_vec(e)) continue;
    bool ok = false;
    if (t.affine && e[0] % t.alpha0[0] == 0) {
      int m = e[0] / t.alpha0[0];
      ok = true;
      for (int j = 0; j < t.nv; ++j) ok = ok && e[j] == m * t.alpha0[j];
    }
    if (!ok) r.diagonal = false;
  }
  return r;
}

}  // namespace amds
