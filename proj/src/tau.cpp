#include "amds/tau.hpp"

#include <functional>
#include <map>

namespace amds {

namespace {

// Everything below uses 1-based vertex labels.
using Mono = std::vector<std::pair<int, int>>;  // (label, exponent)

struct Builder {
  const DynkinType& t;
  const Bipartition& b;
  TauGenerator g;

  Builder(const DynkinType& t_, const Bipartition& b_, std::string name, const std::vector<int>& word)
      : t(t_), b(b_) {
    g.name = std::move(name);
    for (int v : word) g.word.push_back(v - 1);
    g.images.assign(b.S.size(), Exp(b.S.size(), 0));
    for (size_t k = 0; k < b.S.size(); ++k) g.images[k][k] = 1;
    g.cocycle = ZetaProduct(static_cast<int>(b.S.size()));
  }

  Exp exp_of(const Mono& m) const {
    Exp e(b.S.size(), 0);
    for (auto [v, x] : m) {
      if (!b.in_S[v - 1]) throw InternalError("tau table uses a T vertex");
      e[b.pos[v - 1]] += x;
    }
    return e;
  }
  void image(int v, const Mono& m) { g.images[b.pos[v - 1]] = exp_of(m); }
  // Numerator factor (1 - q^{mu2/2} x^m)^mult.
  void num(int mu2, const Mono& m, int mult = 1) { g.cocycle.add(mu2, exp_of(m), -mult); }
  // Denominator factor (1 - q^{mu2/2} x^m)^{-mult}.
  void den(int mu2, const Mono& m, int mult = 1) {
    g.has_cocycle = true;
    g.cocycle.add(mu2, exp_of(m), mult);
  }
};

Mono scale(Mono m, int s) {
  for (auto& p : m) p.second *= s;
  return m;
}

Mono concat(Mono a, const Mono& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> common_neighbors(const DynkinType& t, int i, int j) {
  std::vector<int> c;
  for (int a : t.adj[i - 1])
    if (t.adjacent(a, j - 1)) c.push_back(a + 1);
  return c;
}

TauGenerator two_neighbor(const DynkinType& t, const Bipartition& b, int i) {
  const auto& nb = t.adj[i - 1];
  Builder B(t, b, "tau_" + std::to_string(i), {i, nb[0] + 1, nb[1] + 1, i});
  B.image(i, {{i, -1}});
  for (int s : b.S) {
    int j = s + 1;
    if (j == i) continue;
    int c = static_cast<int>(common_neighbors(t, i, j).size());
    if (c > 0) B.image(j, {{j, 1}, {i, c}});
  }
  B.num(0, {{i, -2}});
  B.num(2, {{i, -2}});
  B.den(0, {{i, 2}});
  B.den(2, {{i, 2}});
  return B.g;
}

TauGenerator three_neighbor(const DynkinType& t, const Bipartition& b, int i) {
  const auto& nb = t.adj[i - 1];
  int a = nb[0] + 1, c = nb[1] + 1, d = nb[2] + 1;
  Builder B(t, b, "tau_" + std::to_string(i), {i, a, c, d, i, a, c, d, i});
  B.image(i, {{i, -1}});
  for (int s : b.S) {
    int j = s + 1;
    if (j == i) continue;
    int k = static_cast<int>(common_neighbors(t, i, j).size());
    if (k > 0) B.image(j, {{j, 1}, {i, 2 * k}});
  }
  B.num(0, {{i, -2}});
  B.num(2, {{i, -2}}, 3);
  B.num(4, {{i, -2}});
  B.den(-2, {{i, 2}});
  B.den(0, {{i, 2}}, 3);
  B.den(2, {{i, 2}});
  return B.g;
}

// Two leaves a, b of S hanging off the same T vertex m.
TauGenerator leaf_pair(const DynkinType& t, const Bipartition& bp, int a, int b, int m) {
  Builder B(t, bp, "tau_" + std::to_string(a) + "," + std::to_string(b), {a, b, m, a, b});
  B.image(a, {{b, -1}});
  B.image(b, {{a, -1}});
  for (int k : t.adj[m - 1]) {
    int v = k + 1;
    if (v != a && v != b) B.image(v, {{v, 1}, {a, 1}, {b, 1}});
  }
  B.num(0, {{a, -2}});
  B.num(0, {{b, -2}});
  B.num(0, {{a, -1}, {b, -1}});
  B.den(2, {{a, 2}});
  B.den(2, {{b, 2}});
  B.den(2, {{a, 1}, {b, 1}});
  return B.g;
}

void add_local(const DynkinType& t, const Bipartition& b, std::vector<TauGenerator>& out) {
  for (int s : b.S) {
    int i = s + 1;
    if (t.N(s) == 2) out.push_back(two_neighbor(t, b, i));
    if (t.N(s) == 3) out.push_back(three_neighbor(t, b, i));
  }
}

// D~_n, n even, S = {1,2,4,...,n-2,n,n+1}: extra generators tau_{i,j}.
TauGenerator d_even_cross(const DynkinType& t, const Bipartition& b, int i, int j) {
  int n = t.rank;
  std::vector<int> w{i};
  for (int k = 3; k <= n / 2; ++k) w.push_back(k);
  w.push_back(j);
  for (int k = n - 1; k >= 2 + n / 2; --k) w.push_back(k);
  w.push_back(1 + n / 2);
  for (int k = 2 + n / 2; k <= n - 1; ++k) w.push_back(k);
  w.push_back(j);
  for (int k = n / 2; k >= 3; --k) w.push_back(k);
  w.push_back(i);
  Builder B(t, b, "tau_" + std::to_string(i) + "," + std::to_string(j), w);
  Mono mid;  // x_4 x_6 ... x_{n-2}
  for (int k = 4; k <= n - 2; k += 2) mid.push_back({k, 1});
  int i2 = i == 1 ? 2 : 1, j2 = j == n ? n + 1 : n;
  B.image(i, scale(concat(mid, {{j, 1}}), -1));
  B.image(j, scale(concat(mid, {{i, 1}}), -1));
  B.image(i2, concat(mid, {{1, 1}, {2, 1}, {j, 1}}));
  B.image(j2, concat(mid, {{i, 1}, {n, 1}, {n + 1, 1}}));
  auto frac = [&](const Mono& m, int e) {
    B.num(0, scale(m, -e));
    B.den(2, scale(m, e));
  };
  frac({{i, 1}}, 2);
  frac({{j, 1}}, 2);
  frac(concat(mid, {{i, 1}, {j, 1}}), 1);
  for (int k = 4; k <= n - 2; k += 2) {
    Mono left{{i, 1}}, right{{j, 1}};
    for (int l = 4; l <= k; l += 2) left.push_back({l, 1});
    for (int l = k; l <= n - 2; l += 2) right.push_back({l, 1});
    frac(left, 2);
    frac(right, 2);
  }
  return B.g;
}

// D~_n, n odd, S = {1,2,4,...,n-1}, extra tau_i for i in {1,2}; L relabels
// the canonical diagram onto the actual one.
TauGenerator d_odd_extra(const DynkinType& t, const Bipartition& b, int i, const std::function<int(int)>& L) {
  int n = t.rank;
  std::vector<int> w{i};
  for (int k = 3; k <= n - 1; ++k) w.push_back(k);
  w.push_back(n);
  w.push_back(n + 1);
  for (int k = n - 1; k >= 3; --k) w.push_back(k);
  w.push_back(i);
  for (int& v : w) v = L(v);
  auto lm = [&](Mono m) {
    for (auto& p : m) p.first = L(p.first);
    return m;
  };
  Builder B(t, b, "tau_" + std::to_string(L(i)), w);
  Mono mid;  // x_4 ... x_{n-1}
  for (int k = 4; k <= n - 1; k += 2) mid.push_back({k, 1});
  int i2 = i == 1 ? 2 : 1;
  B.image(L(i), lm(concat({{i, -1}}, scale(mid, -2))));
  B.image(L(i2), lm(concat({{i, 2}, {i2, 1}}, scale(mid, 2))));
  B.num(0, lm({{i, -2}}));
  B.den(2, lm({{i, 2}}));
  B.num(2, lm(scale(concat({{i, 1}}, mid), -2)));
  B.den(0, lm(scale(concat({{i, 1}}, mid), 2)));
  for (int k = 4; k <= n - 1; k += 2) {
    Mono a{{i, 1}}, c{{i, 1}};
    for (int l = 4; l <= k; l += 2) a.push_back({l, 1});
    for (int l = 4; l <= k - 2; l += 2) c.push_back({l, 1});
    c = scale(c, 2);
    for (int l = k; l <= n - 1; l += 2) c.push_back({l, 4});
    B.num(0, lm(scale(a, -2)));
    B.den(2, lm(scale(a, 2)));
    B.num(2, lm(scale(c, -1)));
    B.den(0, lm(c));
  }
  return B.g;
}

std::vector<TauGenerator> affine_a(const DynkinType& t, const Bipartition& b) {
  std::vector<TauGenerator> out;
  add_local(t, b, out);
  return out;
}

std::vector<TauGenerator> affine_d(const DynkinType& t, const Bipartition& b) {
  int n = t.rank;
  std::vector<TauGenerator> out;
  bool leaves_in_S = b.in_S[0];
  if (n % 2 == 0) {
    if (!leaves_in_S) {
      add_local(t, b, out);
      return out;
    }
    out.push_back(leaf_pair(t, b, 1, 2, 3));
    for (int s : b.S)
      if (t.N(s) == 2) out.push_back(two_neighbor(t, b, s + 1));
    out.push_back(leaf_pair(t, b, n, n + 1, n - 1));
    for (int i : {1, 2})
      for (int j : {n, n + 1}) out.push_back(d_even_cross(t, b, i, j));
    return out;
  }
  // n odd: the two classes are swapped by the diagram flip.
  std::function<int(int)> L = [](int v) { return v; };
  int la = 1, lb = 2, lm = 3;
  if (!leaves_in_S) {
    L = [n](int v) {
      if (v == 1) return n;
      if (v == 2) return n + 1;
      if (v == n) return 1;
      if (v == n + 1) return 2;
      return n + 2 - v;
    };
    la = n;
    lb = n + 1;
    lm = n - 1;
  }
  out.push_back(leaf_pair(t, b, la, lb, lm));
  add_local(t, b, out);
  out.push_back(d_odd_extra(t, b, 1, L));
  out.push_back(d_odd_extra(t, b, 2, L));
  return out;
}

std::vector<TauGenerator> affine_e6(const DynkinType& t, const Bipartition& b) {
  std::vector<TauGenerator> out;
  add_local(t, b, out);
  if (!b.in_S[0]) return out;
  const std::map<int, std::vector<int>> words{{1, {1, 2, 7, 4, 6, 7, 2, 1}},
                                              {3, {3, 4, 7, 2, 6, 7, 4, 3}},
                                              {5, {5, 6, 7, 2, 4, 7, 6, 5}}};
  for (const auto& [i, w] : words) {
    Builder B(t, b, "tau_" + std::to_string(i) + "'", w);
    B.image(i, {{i, -1}, {7, -2}});
    for (int j : {1, 3, 5})
      if (j != i) B.image(j, {{j, 1}, {i, 1}, {7, 1}});
    B.num(0, {{i, -2}});
    B.num(0, {{i, -2}, {7, -2}});
    B.num(2, {{i, -2}, {7, -2}});
    B.num(2, {{i, -2}, {7, -4}});
    B.den(2, {{i, 2}});
    B.den(2, {{i, 2}, {7, 2}});
    B.den(0, {{i, 2}, {7, 2}});
    B.den(0, {{i, 2}, {7, 4}});
    out.push_back(B.g);
  }
  return out;
}

std::vector<TauGenerator> affine_e7(const DynkinType& t, const Bipartition& b) {
  std::vector<TauGenerator> out;
  add_local(t, b, out);
  if (!b.in_S[0]) return out;
  for (int i : {1, 5}) {
    int i1 = i + 1, i2 = i + 2, other = i == 1 ? 5 : 1;
    Builder B(t, b, "tau_" + std::to_string(i) + ",4", {i, i1, i2, 4, 8, 4, i2, i1, i});
    B.image(i, {{i2, -1}, {4, -1}});
    B.image(4, {{i2, -1}, {i, -1}});
    B.image(other + 2, {{other + 2, 1}, {i, 1}, {i2, 1}, {4, 1}});
    for (const Mono& m : std::vector<Mono>{{{i, 2}}, {{4, 2}}, {{i, 2}, {i2, 2}}, {{i2, 2}, {4, 2}}, {{i, 1}, {i2, 1}, {4, 1}}}) {
      B.num(0, scale(m, -1));
      B.den(2, m);
    }
    out.push_back(B.g);
  }
  {
    Builder B(t, b, "tau_1,5", {1, 2, 3, 5, 6, 7, 8, 7, 6, 5, 3, 2, 1});
    B.image(1, {{3, -1}, {5, -1}, {7, -1}});
    B.image(5, {{1, -1}, {3, -1}, {7, -1}});
    B.image(4, {{1, 1}, {3, 1}, {4, 1}, {5, 1}, {7, 1}});
    for (const Mono& m : std::vector<Mono>{{{1, 2}},
                                           {{5, 2}},
                                           {{1, 2}, {3, 2}},
                                           {{5, 2}, {7, 2}},
                                           {{1, 2}, {3, 2}, {7, 2}},
                                           {{3, 2}, {5, 2}, {7, 2}},
                                           {{1, 1}, {3, 1}, {5, 1}, {7, 1}}}) {
      B.num(0, scale(m, -1));
      B.den(2, m);
    }
    out.push_back(B.g);
  }
  {
    Builder B(t, b, "tau_4'",
              {4, 8, 3, 2, 7, 6, 8, 3, 4, 7, 8, 3, 4, 7, 8, 2, 3, 6, 7, 8, 4});
    B.image(4, {{3, -2}, {4, -1}, {7, -2}});
    for (int j : {1, 5}) B.image(j, {{j, 1}, {3, 2}, {4, 2}, {7, 2}});
    for (const Mono& m : std::vector<Mono>{{{4, 2}}, {{3, 2}, {4, 2}}, {{4, 2}, {7, 2}}}) {
      B.num(0, scale(m, -1));
      B.den(2, m);
    }
    Mono c{{3, 2}, {4, 2}, {7, 2}};
    B.num(2, scale(c, -1));
    B.den(0, c);
    B.num(0, scale(c, -1), 3);
    B.den(2, c, 3);
    B.num(-2, scale(c, -1));
    B.den(4, c);
    for (const Mono& m : std::vector<Mono>{{{3, 4}, {4, 2}, {7, 2}}, {{3, 2}, {4, 2}, {7, 4}}, {{3, 4}, {4, 2}, {7, 4}}}) {
      B.num(0, scale(m, -1));
      B.den(2, m);
    }
    out.push_back(B.g);
  }
  return out;
}

std::vector<TauGenerator> affine_e8(const DynkinType& t, const Bipartition& b) {
  std::vector<TauGenerator> out;
  add_local(t, b, out);
  if (b.in_S[0]) {
    // Analogue of the E6~ tau_1; only the substitution is checked.
    Builder B(t, b, "tau_1'", {1, 2, 9, 3, 8, 9, 2, 1});
    B.g.images.clear();
    out.push_back(B.g);
    return out;
  }
  {
    Builder B(t, b, "tau_3'", {3, 9, 2, 1, 8, 7, 9, 2, 3, 8, 9, 2, 3, 8, 9, 7, 8, 1, 2, 9, 3});
    B.g.images.clear();
    out.push_back(B.g);
  }
  {
    Builder B(t, b, "tau_3,4", {3, 4, 5, 6, 7, 8, 9, 8, 7, 6, 5, 4, 3});
    B.image(3, {{4, -1}, {6, -1}, {8, -1}});
    B.image(4, {{3, -1}, {6, -1}, {8, -1}});
    B.image(2, {{2, 1}, {3, 1}, {4, 1}, {6, 1}, {8, 1}});
    for (const Mono& m : std::vector<Mono>{{{3, 2}},
                                           {{4, 2}},
                                           {{4, 2}, {6, 2}},
                                           {{3, 2}, {8, 2}},
                                           {{4, 2}, {6, 2}, {8, 2}},
                                           {{3, 2}, {6, 2}, {8, 2}},
                                           {{3, 1}, {4, 1}, {6, 1}, {8, 1}}}) {
      B.num(0, scale(m, -1));
      B.den(2, m);
    }
    out.push_back(B.g);
  }
  return out;
}

}  // namespace

std::vector<TauGenerator> tau_generators(const DynkinType& t, const Bipartition& b) {
  if (!t.affine) throw UsageError("residue generators need an affine type");
  switch (t.family) {
    case Family::A:
      return affine_a(t, b);
    case Family::D:
      if (t.rank == 4 && !b.in_S[0]) return {};
      return affine_d(t, b);
    case Family::E:
      if (t.rank == 6) return affine_e6(t, b);
      if (t.rank == 7) return affine_e7(t, b);
      return affine_e8(t, b);
  }
  return {};
}

}  // namespace amds
