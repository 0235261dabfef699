#include "amds/mdsbuild.hpp"

#include <algorithm>
#include <sstream>

#include "amds/residue.hpp"

namespace amds {

namespace {

void trim(LinComb& l) {
  while (!l.empty() && l.back().is_zero()) l.pop_back();
}

void add_scaled(LinComb& out, const LinComb& in, const QLaurent& f) {
  if (f.is_zero()) return;
  if (out.size() < in.size()) out.resize(in.size());
  for (size_t m = 0; m < in.size(); ++m)
    if (!in[m].is_zero()) out[m] += in[m] * f;
}

std::string exp_str(const Exp& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

bool any_negative(const Exp& a) {
  return std::any_of(a.begin(), a.end(), [](int v) { return v < 0; });
}

}  // namespace

QLaurent evaluate(const LinComb& l, const DiagonalSpec& d) {
  QLaurent r;
  for (size_t m = 0; m < l.size(); ++m) {
    if (l[m].is_zero()) continue;
    if (m >= d.values.size())
      throw InternalError("diagonal coefficient " + std::to_string(m) + " not determined");
    r += l[m] * d.values[m];
  }
  return r;
}

int Reducer::choose(const Exp& a) const {
  int best = -1, best_v = 0;
  for (int i = 0; i < t_.nv; ++i) {
    int v = 2 * a[i] - t_.A(a, i);
    if (v > best_v) best_v = v, best = i;
  }
  return best;
}

LinComb Reducer::step(const Exp& a, int i) {
  int A = t_.A(a, i);
  LinComb out;
  Exp b = a;
  if (A % 2 == 1) {
    b[i] = A - 1 - a[i];
    if (b[i] >= 0) add_scaled(out, reduce(b), QLaurent::monomial(1, 2 * a[i] - (A - 1)));
  } else {
    b[i] = a[i] - 1;
    if (b[i] >= 0) add_scaled(out, reduce(b), QLaurent::q_pow(1));
    QLaurent f = QLaurent::monomial(1, 2 * a[i] - A);
    b[i] = A - a[i];
    if (b[i] >= 0) add_scaled(out, reduce(b), f);
    b[i] = A - a[i] - 1;
    if (b[i] >= 0) add_scaled(out, reduce(b), -(f * QLaurent::q_pow(1)));
  }
  trim(out);
  return out;
}

const LinComb& Reducer::reduce(const Exp& a) {
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  LinComb val;
  if (!any_negative(a)) {
    int i = choose(a);
    if (i >= 0) {
      val = step(a, i);
    } else {
      int m = -1;
      if (is_zero_vec(a)) {
        m = 0;
      } else if (t_.affine && a[0] % t_.alpha0[0] == 0) {
        int k = a[0] / t_.alpha0[0];
        bool ok = true;
        for (int j = 0; j < t_.nv; ++j) ok = ok && a[j] == k * t_.alpha0[j];
        if (ok) m = k;
      }
      if (m < 0) throw InternalError("reduction stuck at irreducible index " + exp_str(a));
      val.assign(m + 1, QLaurent());
      val[m] = QLaurent::one();
    }
  }
  return memo_.emplace(a, std::move(val)).first->second;
}

LinComb Reducer::reduce_via(const Exp& a, int i) {
  if (2 * a[i] - t_.A(a, i) <= 0) throw InternalError("vertex not reducible at " + exp_str(a));
  return step(a, i);
}

QLaurent reduce_coefficient(const DynkinType& t, const Exp& a, const DiagonalSpec& d) {
  Reducer red(t);
  return evaluate(red.reduce(a), d);
}

QLaurent CoeffTable::at(const Exp& a) const {
  auto it = entries.find(a);
  return it == entries.end() ? QLaurent() : it->second;
}

bool CoeffTable::has(const Exp& a) const { return !any_negative(a) && total_degree(a) <= bound; }

TruncSeries g_series(Reducer& red, const Bipartition& b, int M) {
  const DynkinType& t = red.type();
  if (!t.affine) throw UsageError("g_series needs an affine type");
  int hT = b.hT(t);
  TruncSeries G(1, M);
  for (int m = 0; m <= M; ++m) {
    Exp a(t.nv);
    for (int j = 0; j < t.nv; ++j) a[j] = (b.in_S[j] ? 1 : 2) * m * t.alpha0[j];
    const LinComb& l = red.reduce(a);
    if (l.empty() || l[0].is_zero()) continue;
    G.add({m}, l[0].shifted(-2 * m * hT));
  }
  return G;
}

TruncSeries g_series(const DynkinType& t, const Bipartition& b, int M) {
  Reducer red(t);
  return g_series(red, b, M);
}

DiagonalResult determine_diagonal(Reducer& red, const Bipartition& b, int M, SplitRule rule) {
  const DynkinType& t = red.type();
  if (!t.affine) throw UsageError("determine_diagonal needs an affine type");
  const int ht = t.ht_alpha0(), hS = b.hS(t), hT = b.hT(t);
  DiagonalResult r;
  r.G = g_series(red, b, M);

  Exp dirS = b.restrict_S(t.alpha0);
  TruncSeries r0 = expand(r0_product(t, b, M * hS), M * hS);
  TruncSeries r0d = diagonal_part(r0, dirS).with_bound(M);
  r.r0_diag = TruncSeries(1, M);
  for (const auto& [e, c] : r0d.terms()) r.r0_diag.add(e, c.shifted(2 * e[0] * hT));

  TruncSeries F = r.G * r.r0_diag.inverse();
  r.quotient = factorize(F, M);

  r.z_diag = ZetaProduct(1);
  r.r1_x = ZetaProduct(1);
  r.r1_S = ZetaProduct(b.S.size());
  for (const ZetaFactor& f : r.quotient.factors()) {
    int k = f.nu[0];
    if (f.mu2 <= 0 || f.mu2 >= 2 * k * ht) throw InternalError("dominance/degree bound violated");
    bool low = rule == SplitRule::LessEqual ? f.mu2 <= k * ht : f.mu2 < k * ht;
    if (low) {
      int partner = 2 - f.mu2 + 2 * k * ht;
      r.r1_x.add(f.mu2, {k}, f.lambda);
      r.r1_x.add(partner, {k}, f.lambda);
      r.z_diag.add(partner, {k}, f.lambda);
    } else {
      r.z_diag.add(f.mu2, {k}, -f.lambda);
    }
  }
  for (const ZetaFactor& f : r.r1_x.factors()) {
    Exp nu = dirS;
    for (int& v : nu) v *= f.nu[0];
    r.r1_S.add(f.mu2 - 2 * f.nu[0] * hT, nu, f.lambda);
  }

  TruncSeries z = expand(r.z_diag, M);
  r.diag.values.assign(M + 1, QLaurent());
  for (const auto& [e, c] : z.terms()) r.diag.values[e[0]] = c;
  for (int m = 1; m <= M; ++m) {
    const QLaurent& c = r.diag.values[m];
    if (c.is_zero()) continue;
    if (!c.is_polynomial_in_q() || c.hi() > 2 * m * ht || c.lo() <= m * ht + 1) r.condition_dominance = false;
  }
  for (const ZetaFactor& f : r.r1_x.factors()) {
    int k = f.nu[0];
    if (r.r1_x.lambda(2 - f.mu2 + 2 * k * ht, f.nu) != f.lambda) r.condition_symmetry = false;
  }
  return r;
}

DiagonalResult determine_diagonal(const DynkinType& t, const Bipartition& b, int M, SplitRule rule) {
  Reducer red(t);
  return determine_diagonal(red, b, M, rule);
}

std::vector<Exp> indices_up_to(int nvars, int B) {
  std::vector<Exp> out;
  Exp cur(nvars, 0);
  for (int total = 0; total <= B; ++total) {
    // Compositions of total in lexicographic order.
    std::vector<Exp> level;
    std::fill(cur.begin(), cur.end(), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == nvars - 1) {
        cur[pos] = left;
        level.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    if (nvars == 0) {
      if (total == 0) level.push_back({});
    } else {
      rec(rec, 0, total);
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

CoeffTable compute_table_with(const DynkinType& t, int B, const DiagonalSpec& d) {
  CoeffTable tab;
  tab.type = t;
  tab.bound = B;
  tab.diag = d;
  Reducer red(t);
  for (const Exp& a : indices_up_to(t.nv, B)) {
    QLaurent c = evaluate(red.reduce(a), d);
    if (!c.is_zero()) tab.entries.emplace(a, std::move(c));
  }
  return tab;
}

CoeffTable compute_table(const DynkinType& t, int B) {
  if (!t.affine) return compute_table_with(t, B, DiagonalSpec::delta());
  int M = B / t.ht_alpha0();
  DiagonalSpec d = determine_diagonal(t, bipartitions(t)[0], M).diag;
  return compute_table_with(t, B, d);
}

std::map<Exp, QLaurent, GradedLess> local_weights(const CoeffTable& table) {
  std::map<Exp, QLaurent, GradedLess> out;
  for (const auto& [a, c] : table.entries) {
    if (!c.is_polynomial_in_q()) throw InternalError("local weight is not a polynomial at " + exp_str(a));
    out.emplace(a, c.reflected(total_degree(a)));
  }
  return out;
}

SliceResult fe_slice_check(const CoeffTable& table, int i, const Exp& fixed) {
  const DynkinType& t = table.type;
  int A = t.A(fixed, i);
  int room = table.bound - (total_degree(fixed) - fixed[i]);
  bool odd = A % 2 == 1;
  int need = odd ? A - 1 : A;
  if (room < need) return SliceResult::Insufficient;
  int kmax = std::min(room, need + 1);
  Exp a = fixed;
  auto c = [&](int k) {
    if (k < 0) return QLaurent();
    a[i] = k;
    return table.at(a);
  };
  // Odd: lambda itself; even: (1 - q x) lambda. Both must be polynomials
  // of degree <= need with d_k = q^{k - need/2} d_{need - k}.
  std::vector<QLaurent> d(kmax + 1);
  for (int k = 0; k <= kmax; ++k) d[k] = odd ? c(k) : c(k) - c(k - 1) * QLaurent::q_pow(1);
  for (int k = need + 1; k <= kmax; ++k)
    if (!d[k].is_zero()) return SliceResult::Fail;
  for (int k = 0; k <= need; ++k)
    if (d[k] != d[need - k].shifted(2 * k - need)) return SliceResult::Fail;
  return SliceResult::Pass;
}

void CheckReport::fail(const std::string& what) {
  ++failed;
  if (failures.size() < 8) failures.push_back(what);
}

CheckReport check_initial_conditions(const CoeffTable& table) {
  CheckReport r;
  r.name = "initial_conditions";
  const int n = table.type.nv;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a <= table.bound; ++a) {
      Exp e(n, 0);
      e[i] = a;
      ++r.checked;
      if (table.at(e) != QLaurent::q_pow(a)) r.fail(exp_str(e));
    }
  return r;
}

CheckReport check_dominance(const CoeffTable& table) {
  CheckReport r;
  r.name = "dominance";
  for (const auto& [a, c] : table.entries) {
    int s = total_degree(a);
    if (s <= 1) continue;
    ++r.checked;
    // Degrees d with s + 1 < 2d <= 2s, exponents stored in half-steps.
    if (!c.is_polynomial_in_q() || c.lo() <= s + 1 || c.hi() > 2 * s) r.fail(exp_str(a) + " -> " + c.str());
  }
  return r;
}

CheckReport check_degree_bound(const CoeffTable& table) {
  CheckReport r;
  r.name = "degree_bound";
  for (const auto& [a, c] : table.entries) {
    ++r.checked;
    int s = total_degree(a);
    if (!c.is_polynomial_in_q() || c.hi() > 2 * s) r.fail(exp_str(a) + " -> " + c.str());
  }
  return r;
}

CheckReport check_recurrences(const CoeffTable& table) {
  CheckReport r;
  r.name = "recurrences";
  const DynkinType& t = table.type;
  for (const Exp& a : indices_up_to(t.nv, table.bound)) {
    for (int i = 0; i < t.nv; ++i) {
      int A = t.A(a, i);
      Exp b = a;
      QLaurent lhs = table.at(a), rhs;
      bool inside = true;
      auto get = [&](int k) {
        if (k < 0) return QLaurent();
        b[i] = k;
        if (!table.has(b)) inside = false;
        return table.at(b);
      };
      if (A % 2 == 1) {
        rhs = get(A - 1 - a[i]).shifted(2 * a[i] - (A - 1));
      } else {
        QLaurent q = QLaurent::q_pow(1);
        rhs = get(a[i] - 1) * q + (get(A - a[i]) - get(A - a[i] - 1) * q).shifted(2 * a[i] - A);
      }
      if (!inside) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (lhs != rhs) r.fail(exp_str(a) + " at vertex " + std::to_string(i + 1));
    }
  }
  return r;
}

CheckReport check_fe_slices(const CoeffTable& table) {
  CheckReport r;
  r.name = "fe_slices";
  const DynkinType& t = table.type;
  for (int i = 0; i < t.nv; ++i)
    for (const Exp& a : indices_up_to(t.nv, table.bound)) {
      if (a[i] != 0) continue;
      switch (fe_slice_check(table, i, a)) {
        case SliceResult::Pass: ++r.checked; break;
        case SliceResult::Fail: ++r.checked; r.fail(exp_str(a) + " slice " + std::to_string(i + 1)); break;
        case SliceResult::Insufficient: ++r.skipped; break;
      }
    }
  return r;
}

CheckReport check_confluence(const DynkinType& t, int B) {
  CheckReport r;
  r.name = "confluence";
  Reducer red(t);
  for (const Exp& a : indices_up_to(t.nv, B)) {
    const LinComb ref = red.reduce(a);
    for (int i = 0; i < t.nv; ++i) {
      if (2 * a[i] - t.A(a, i) <= 0) continue;
      ++r.checked;
      if (red.reduce_via(a, i) != ref) r.fail(exp_str(a) + " via " + std::to_string(i + 1));
    }
  }
  return r;
}

LowestTerm p_lowest_term(Reducer& red, int a) {
  const DynkinType& t = red.type();
  if (!t.affine || t.family != Family::A) throw UsageError("p_lowest_term needs A~_n");
  Exp idx(t.nv);
  for (int j = 0; j < t.nv; ++j) idx[j] = (j % 2 == 0 ? 1 : 2) * a;
  const LinComb& l = red.reduce(idx);
  if (l.empty() || l[0].is_zero()) return {0, 0};
  const QLaurent& c = l[0];
  if (c.lo() % 2 != 0) throw InternalError("p_a has a half-integral exponent");
  return {c.lo() / 2, c.coeff(c.lo())};
}

}  // namespace amds
