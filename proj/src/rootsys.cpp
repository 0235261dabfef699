#include "amds/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace amds {

bool DynkinType::adjacent(int i, int j) const {
  return std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end();
}

int DynkinType::ht_alpha0() const { return height(alpha0); }

int DynkinType::A(const Exp& a, int i) const {
  int s = 0;
  for (int j : adj[i]) s += a[j];
  return s;
}

namespace {

void add_edge(DynkinType& t, int i, int j) {  // 1-based
  t.adj[i - 1].push_back(j - 1);
  t.adj[j - 1].push_back(i - 1);
}

void finish(DynkinType& t) {
  for (auto& v : t.adj) std::sort(v.begin(), v.end());
}

}  // namespace

DynkinType make_type(Family f, int n, bool affine) {
  DynkinType t;
  t.family = f;
  t.rank = n;
  t.affine = affine;
  const char* fam = f == Family::A ? "A" : f == Family::D ? "D" : "E";
  t.name = std::string(fam) + std::to_string(n) + (affine ? "~" : "");
  t.nv = affine ? n + 1 : n;
  t.adj.assign(t.nv, {});
  if (f == Family::A) {
    if (affine) {
      if (n < 3) throw UsageError("A~ needs n >= 3");
      if (n % 2 == 0) throw UsageError("A~ with even n unsupported");
      for (int i = 1; i <= n + 1; ++i) add_edge(t, i, i % (n + 1) + 1);
      t.alpha0.assign(t.nv, 1);
    } else {
      if (n < 1) throw UsageError("A needs n >= 1");
      for (int i = 1; i < n; ++i) add_edge(t, i, i + 1);
    }
  } else if (f == Family::D) {
    if (n < 4) throw UsageError("D needs n >= 4");
    if (affine) {
      add_edge(t, 1, 3);
      add_edge(t, 2, 3);
      for (int i = 3; i < n - 1; ++i) add_edge(t, i, i + 1);
      add_edge(t, n - 1, n);
      add_edge(t, n - 1, n + 1);
      t.alpha0.assign(t.nv, 2);
      t.alpha0[0] = t.alpha0[1] = t.alpha0[n - 1] = t.alpha0[n] = 1;
    } else {
      for (int i = 1; i < n - 1; ++i) add_edge(t, i, i + 1);
      add_edge(t, n - 2, n);
    }
  } else {
    if (n < 6 || n > 8) throw UsageError("E needs n in {6,7,8}");
    if (affine) {
      if (n == 6) {
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 7}, {3, 4}, {4, 7}, {5, 6}, {6, 7}})
          add_edge(t, a, b);
        t.alpha0 = {1, 2, 1, 2, 1, 2, 3};
      } else if (n == 7) {
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 8}, {8, 7}, {7, 6}, {6, 5}, {8, 4}})
          add_edge(t, a, b);
        t.alpha0 = {1, 2, 3, 2, 1, 2, 3, 4};
      } else {
        for (auto [a, b] :
             std::vector<std::pair<int, int>>{{1, 2}, {2, 9}, {9, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 4}, {3, 9}})
          add_edge(t, a, b);
        t.alpha0 = {2, 4, 3, 1, 2, 3, 4, 5, 6};
      }
    } else {
      add_edge(t, 1, 3);
      add_edge(t, 3, 4);
      add_edge(t, 2, 4);
      for (int i = 4; i < n; ++i) add_edge(t, i, i + 1);
    }
  }
  finish(t);
  if (affine) {
    for (int i = 0; i < t.nv; ++i)
      if (t.A(t.alpha0, i) != 2 * t.alpha0[i]) throw InternalError("alpha0 is not invariant for " + t.name);
  }
  return t;
}

DynkinType parse_type(const std::string& text) {
  static const std::regex re("^([ADE])([0-9]{1,2})(~?)$");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("cannot parse type '" + text + "'");
  Family f = m[1] == "A" ? Family::A : m[1] == "D" ? Family::D : Family::E;
  return make_type(f, std::stoi(m[2]), m[3] == "~");
}

std::string Bipartition::label() const {
  std::string s = "S={";
  for (size_t k = 0; k < S.size(); ++k) s += (k ? "," : "") + std::to_string(S[k] + 1);
  return s + "}";
}

int Bipartition::hS(const DynkinType& t) const {
  int h = 0;
  for (int i : S) h += t.alpha0[i];
  return h;
}

int Bipartition::hT(const DynkinType& t) const {
  int h = 0;
  for (int i : T) h += t.alpha0[i];
  return h;
}

Exp Bipartition::restrict_S(const Exp& full) const {
  Exp r;
  r.reserve(S.size());
  for (int i : S) r.push_back(full[i]);
  return r;
}

static Bipartition make_bip(const DynkinType& t, const std::vector<bool>& in_S) {
  Bipartition b;
  b.in_S = in_S;
  b.pos.assign(t.nv, 0);
  for (int i = 0; i < t.nv; ++i) {
    if (in_S[i]) {
      b.pos[i] = static_cast<int>(b.S.size());
      b.S.push_back(i);
    } else {
      b.pos[i] = static_cast<int>(b.T.size());
      b.T.push_back(i);
    }
  }
  return b;
}

std::vector<Bipartition> bipartitions(const DynkinType& t) {
  std::vector<int> color(t.nv, -1);
  color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : t.adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        throw UsageError(t.name + " is not two-colorable");
      }
    }
  }
  std::vector<bool> a(t.nv), b(t.nv);
  for (int i = 0; i < t.nv; ++i) {
    a[i] = color[i] == 0;
    b[i] = !a[i];
  }
  return {make_bip(t, a), make_bip(t, b)};
}

Bipartition bipartition_from_S(const DynkinType& t, const std::vector<int>& S_one_based) {
  std::vector<bool> in_S(t.nv, false);
  for (int v : S_one_based) {
    if (v < 1 || v > t.nv) throw UsageError("vertex out of range in S");
    in_S[v - 1] = true;
  }
  for (const auto& b : bipartitions(t))
    if (b.in_S == in_S) return b;
  throw UsageError("S is not a color class of " + t.name);
}

int height(const RootVec& a) {
  int h = 0;
  for (int v : a) h += v;
  return h;
}

RootVec simple_reflect(const DynkinType& t, int i, const RootVec& a) {
  RootVec r = a;
  r[i] = t.A(a, i) - a[i];
  return r;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix reflection_matrix(const DynkinType& t, int i) {
  IntMatrix m = identity_matrix(t.nv);
  m[i][i] = -1;
  for (int j : t.adj[i]) m[i][j] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<int>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      int v = a[i][l];
      if (v == 0) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += v * b[l][j];
    }
  return c;
}

RootVec mat_apply(const IntMatrix& m, const RootVec& v) {
  RootVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

XMonomialImage sigma_on_x_monomial(const DynkinType& t, int i, const Exp& nu) {
  XMonomialImage r{nu, 0};
  int a = t.A(nu, i);
  r.nu[i] = a - nu[i];
  r.shift2 = a - 2 * nu[i];
  return r;
}

bool is_nonneg(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}
bool is_nonpos(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v <= 0; });
}
bool is_zero_vec(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

static int quad_form(const DynkinType& t, const RootVec& a) {
  int s = 0;
  for (int i = 0; i < t.nv; ++i) {
    s += 2 * a[i] * a[i];
    for (int j : t.adj[i])
      if (j > i) s -= 2 * a[i] * a[j];
  }
  return s;
}

bool is_real_root(const DynkinType& t, const RootVec& a) {
  if (!is_nonneg(a) && !is_nonpos(a)) return false;
  return quad_form(t, a) == 2;
}

static bool height_lex_less(const RootVec& a, const RootVec& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

std::vector<RootVec> psi_roots(const DynkinType& t) {
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (int i = 0; i < t.nv; ++i) {
    RootVec e(t.nv, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec a = queue.front();
    queue.pop_front();
    for (int i = 0; i < t.nv; ++i) {
      RootVec b = simple_reflect(t, i, a);
      if (height(b) <= height(a)) continue;
      if (t.affine) {
        bool inside = true;
        for (int k = 0; k < t.nv; ++k) inside = inside && b[k] <= t.alpha0[k];
        if (!inside) continue;
      }
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  std::vector<RootVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

std::vector<RootVec> roots_up_to(const DynkinType& t, int m_max) {
  std::vector<RootVec> psi = psi_roots(t);
  if (!t.affine) return psi;
  std::vector<RootVec> out;
  for (int m = 0; m <= m_max; ++m)
    for (const auto& b : psi) {
      RootVec r = b;
      for (int k = 0; k < t.nv; ++k) r[k] += m * t.alpha0[k];
      out.push_back(r);
    }
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

std::vector<RootVec> positive_roots_by_height(const DynkinType& t, int h) {
  int m_max = t.affine ? h / t.ht_alpha0() + 1 : 0;
  std::vector<RootVec> all = roots_up_to(t, m_max), out;
  for (auto& r : all)
    if (height(r) <= h) out.push_back(r);
  return out;
}

IntMatrix word_matrix(const DynkinType& t, const std::vector<int>& word) {
  IntMatrix m = identity_matrix(t.nv);
  for (int i : word) m = mat_mul(m, reflection_matrix(t, i));
  return m;
}

std::vector<WeylElement> weyl_enumerate(const DynkinType& t, int l_max) {
  std::vector<WeylElement> out;
  std::map<IntMatrix, size_t> index;
  WeylElement id{identity_matrix(t.nv), {}};
  index[id.matrix] = 0;
  out.push_back(id);
  size_t level_begin = 0;
  for (int l = 0; l < l_max; ++l) {
    size_t level_end = out.size();
    std::map<IntMatrix, std::vector<int>> next;
    for (size_t k = level_begin; k < level_end; ++k) {
      const WeylElement& w = out[k];
      for (int i = 0; i < t.nv; ++i) {
        // Column i of the matrix is w(e_i); length grows iff it is positive.
        bool positive = false;
        for (int r = 0; r < t.nv; ++r)
          if (w.matrix[r][i] != 0) {
            positive = w.matrix[r][i] > 0;
            break;
          }
        if (!positive) continue;
        IntMatrix m = mat_mul(w.matrix, reflection_matrix(t, i));
        std::vector<int> word = w.word;
        word.push_back(i);
        auto it = next.find(m);
        if (it == next.end())
          next.emplace(std::move(m), std::move(word));
        else if (word < it->second)
          it->second = std::move(word);
      }
    }
    std::vector<WeylElement> level;
    for (auto& [m, word] : next) level.push_back({m, word});
    std::sort(level.begin(), level.end(), [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
    for (auto& w : level) {
      index[w.matrix] = out.size();
      out.push_back(std::move(w));
    }
    level_begin = level_end;
    if (level_begin == out.size()) break;
  }
  return out;
}

std::vector<RootVec> inversion_set(const DynkinType& t, const std::vector<int>& word) {
  std::vector<RootVec> out;
  for (size_t k = 0; k < word.size(); ++k) {
    RootVec r(t.nv, 0);
    r[word[k]] = 1;
    for (size_t j = k + 1; j < word.size(); ++j) r = simple_reflect(t, word[j], r);
    if (!is_nonneg(r)) throw InternalError("word is not reduced: " + word_str(word));
    out.push_back(r);
  }
  return out;
}

std::string word_str(const std::vector<int>& word) {
  std::string s;
  for (size_t k = 0; k < word.size(); ++k) s += (k ? "," : "") + std::to_string(word[k] + 1);
  return "[" + s + "]";
}

bool is_exceptional(const DynkinType& t, const Bipartition& b, const RootVec& a) {
  if (!t.affine) return false;
  for (int i : b.T) {
    for (int sign : {1, -1}) {
      RootVec r = a;
      r[i] -= sign;
      bool ok = true;
      int m = -1;
      for (int k = 0; k < t.nv && ok; ++k) {
        if (r[k] % t.alpha0[k] != 0) {
          ok = false;
          break;
        }
        int mk = r[k] / t.alpha0[k];
        if (m < 0) m = mk;
        ok = mk == m;
      }
      if (ok && m >= 0) return true;
    }
  }
  return false;
}

OrbitClass orbit_class(const DynkinType& t, const Bipartition& b, const RootVec& a) {
  OrbitClass oc;
  std::set<RootVec> seen{a};
  std::deque<RootVec> queue{a};
  while (!queue.empty()) {
    RootVec r = queue.front();
    queue.pop_front();
    for (int i : b.T) {
      RootVec s = simple_reflect(t, i, r);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  oc.members.assign(seen.begin(), seen.end());
  std::sort(oc.members.begin(), oc.members.end(), height_lex_less);
  oc.representative = oc.members.front();
  for (int i : b.T)
    if (t.A(a, i) % 2 != 0) ++oc.t;
  oc.exceptional = is_exceptional(t, b, a);
  return oc;
}

}  // namespace amds
