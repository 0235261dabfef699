#include "amds/fqpoly.hpp"

#include <algorithm>

namespace amds {

static bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(int q) : p_(q) {
  if (!is_prime(q) || q == 2) throw UsageError("only odd prime q is supported, got " + std::to_string(q));
  square_.assign(q, false);
  for (int a = 1; a < q; ++a) square_[static_cast<size_t>(a) * a % q] = true;
}

int FiniteField::pow(int a, int64_t e) const {
  int64_t r = 1, b = a % p_;
  while (e > 0) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int FiniteField::inv(int a) const {
  if (a % p_ == 0) throw InternalError("inverse of zero in F_q");
  return pow(a, p_ - 2);
}

bool FieldPoly::operator<(const FieldPoly& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  return c < o.c;
}

FieldPoly poly_trim(FieldPoly f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

FieldPoly poly_const(int c) { return poly_trim(FieldPoly{{c}}); }
FieldPoly poly_t() { return FieldPoly{{0, 1}}; }

FieldPoly poly_add(const FiniteField& F, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t k = 0; k < r.c.size(); ++k)
    r.c[k] = F.add(k < a.c.size() ? a.c[k] : 0, k < b.c.size() ? b.c[k] : 0);
  return poly_trim(r);
}

FieldPoly poly_sub(const FiniteField& F, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t k = 0; k < r.c.size(); ++k)
    r.c[k] = F.sub(k < a.c.size() ? a.c[k] : 0, k < b.c.size() ? b.c[k] : 0);
  return poly_trim(r);
}

FieldPoly poly_mul(const FiniteField& F, const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FieldPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  return poly_trim(r);
}

FieldPoly poly_scale(const FiniteField& F, const FieldPoly& a, int s) {
  FieldPoly r = a;
  for (int& v : r.c) v = F.mul(v, s);
  return poly_trim(r);
}

std::pair<FieldPoly, FieldPoly> poly_divmod(const FiniteField& F, const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  FieldPoly r = a, quo;
  int db = b.degree();
  int linv = F.inv(b.lead());
  if (r.degree() < db) return {quo, r};
  quo.c.assign(r.degree() - db + 1, 0);
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    int coef = F.mul(r.lead(), linv);
    quo.c[shift] = coef;
    for (int k = 0; k <= db; ++k) r.c[shift + k] = F.sub(r.c[shift + k], F.mul(coef, b.c[k]));
    r = poly_trim(r);
  }
  return {poly_trim(quo), r};
}

FieldPoly poly_mod(const FiniteField& F, const FieldPoly& a, const FieldPoly& m) { return poly_divmod(F, a, m).second; }

FieldPoly poly_powmod(const FiniteField& F, FieldPoly a, Int e, const FieldPoly& m) {
  FieldPoly r = poly_mod(F, poly_const(1), m);
  a = poly_mod(F, a, m);
  while (e > 0) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, a), m);
    a = poly_mod(F, poly_mul(F, a, a), m);
    e >>= 1;
  }
  return r;
}

FieldPoly poly_monic(const FiniteField& F, const FieldPoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.lead()));
}

FieldPoly poly_gcd(const FiniteField& F, FieldPoly a, FieldPoly b) {
  while (!b.is_zero()) {
    FieldPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

// Rank order: lexicographic on (c_0, ..., c_{d-1}) with c_0 most significant.
FieldPoly monic_from_rank(const FiniteField& F, int d, int64_t k) {
  FieldPoly f;
  f.c.assign(d + 1, 0);
  f.c[d] = 1;
  for (int j = d - 1; j >= 0; --j) {
    f.c[j] = static_cast<int>(k % F.q());
    k /= F.q();
  }
  return f;
}

int64_t monic_rank(const FiniteField& F, const FieldPoly& f) {
  int64_t k = 0;
  for (int j = 0; j < f.degree(); ++j) k = k * F.q() + f.c[j];
  return k;
}

std::vector<FieldPoly> enumerate_monic(const FiniteField& F, int d) {
  if (d < 0) throw UsageError("enumerate_monic: negative degree");
  int64_t n = 1;
  for (int k = 0; k < d; ++k) n *= F.q();
  std::vector<FieldPoly> out;
  out.reserve(n);
  for (int64_t k = 0; k < n; ++k) out.push_back(monic_from_rank(F, d, k));
  return out;
}

bool is_irreducible(const FiniteField& F, const FieldPoly& f) {
  int d = f.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e)
    for (const auto& g : enumerate_monic(F, e))
      if (poly_mod(F, f, g).is_zero()) return false;
  return true;
}

std::vector<FieldPoly> monic_irreducibles(const FiniteField& F, int d) {
  std::vector<FieldPoly> out;
  for (auto& g : enumerate_monic(F, d))
    if (is_irreducible(F, g)) out.push_back(g);
  return out;
}

Factorization factor(const FiniteField& F, const FieldPoly& f) {
  if (f.is_zero()) throw UsageError("zero has no factorization");
  Factorization fac;
  fac.unit = f.lead();
  FieldPoly rest = poly_monic(F, f);
  for (int e = 1; 2 * e <= rest.degree(); ++e) {
    for (const auto& p : monic_irreducibles(F, e)) {
      int mult = 0;
      while (rest.degree() >= e) {
        auto [quo, rem] = poly_divmod(F, rest, p);
        if (!rem.is_zero()) break;
        rest = quo;
        ++mult;
      }
      if (mult > 0) fac.factors.emplace_back(p, mult);
    }
  }
  if (rest.degree() >= 1) fac.factors.emplace_back(rest, 1);
  std::sort(fac.factors.begin(), fac.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return fac;
}

FieldPoly multiply_out(const FiniteField& F, const Factorization& fac) {
  FieldPoly r = poly_const(fac.unit);
  for (auto& [p, m] : fac.factors)
    for (int k = 0; k < m; ++k) r = poly_mul(F, r, p);
  return r;
}

bool is_squarefree(const FiniteField& F, const FieldPoly& f) {
  if (f.is_zero()) return false;
  for (auto& [p, m] : factor(F, f).factors)
    if (m > 1) return false;
  return true;
}

int sgn(const FiniteField& F, const FieldPoly& f) {
  if (f.is_zero()) throw InternalError("sgn of zero");
  return F.is_square(f.lead()) ? 1 : -1;
}

int chi_prime(const FiniteField& F, const FieldPoly& p, const FieldPoly& g) {
  FieldPoly r = poly_mod(F, g, p);
  if (r.is_zero()) return 0;
  Int norm = ipow(F.q(), p.degree());
  FieldPoly e = poly_powmod(F, r, (norm - 1) / 2, p);
  if (e == poly_const(1)) return 1;
  if (e == poly_const(F.q() - 1)) return -1;
  throw InternalError("Euler criterion produced a non-sign");
}

int residue_symbol(const FiniteField& F, const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero()) throw UsageError("residue symbol with zero top argument");
  Factorization fac = factor(F, f);
  int r = 1;
  for (auto& [p, m] : fac.factors) {
    int c = chi_prime(F, p, g);
    if (c == 0) return 0;
    if (m % 2 == 1) r *= c;
  }
  if (g.is_zero()) throw UsageError("residue symbol (c/0) with constant c");
  if (g.degree() % 2 == 1 && !F.is_square(fac.unit)) r = -r;
  return r;
}

int residue_symbol_reciprocity(const FiniteField& F, const FieldPoly& f0, const FieldPoly& g0) {
  if (F.q() % 4 != 1) throw UsageError("reciprocity shortcut needs q = 1 mod 4");
  if (!f0.is_monic() || !g0.is_monic()) throw UsageError("reciprocity shortcut needs monic inputs");
  FieldPoly f = f0, g = g0;
  int sign = 1;
  // Invariant: answer = sign * (f/g) with f monic.
  for (;;) {
    if (f.degree() == 0) return sign;
    FieldPoly r = poly_mod(F, g, f);
    if (r.is_zero()) return 0;
    int c = r.lead();
    if (f.degree() % 2 == 1 && !F.is_square(c)) sign = -sign;
    g = f;
    f = poly_monic(F, r);
  }
}

LPoly lfunction(const FiniteField& F, const FieldPoly& f, int max_deg) {
  if (f.is_zero()) throw UsageError("zero conductor");
  if (!is_squarefree(F, f)) throw UsageError("take squarefree part first");
  LPoly L;
  L.conductor = f;
  L.q = F.q();
  L.conductor_sign = sgn(F, f);
  int top = f.degree() >= 1 ? std::min(max_deg, f.degree() - 1) : max_deg;
  for (int d = 0; d <= top; ++d) {
    Int s = 0;
    for (const auto& g : enumerate_monic(F, d)) s += residue_symbol(F, f, g);
    L.coeffs.push_back(s);
  }
  for (int d = top + 1; d <= max_deg; ++d) L.coeffs.push_back(0);
  return L;
}

static std::vector<Int> trimmed(std::vector<Int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

bool check_lfe(const LPoly& L) {
  int df = L.conductor.degree();
  Int q = L.q;
  std::vector<Int> c = trimmed(L.coeffs);
  if (df <= 0) {
    // zeta(sgn x): coefficients (sgn q)^d.
    for (size_t d = 0; d < L.coeffs.size(); ++d)
      if (L.coeffs[d] != ipow(q * L.conductor_sign, static_cast<int>(d))) return false;
    return true;
  }
  std::vector<Int> p;
  int top;
  if (df % 2 == 1) {
    p = c;
    top = df - 1;
  } else {
    // Divide out (1 - sgn x) exactly.
    Int s = L.conductor_sign;
    Int acc = 0;
    for (size_t k = 0; k < c.size(); ++k) {
      acc = c[k] + s * acc;
      p.push_back(acc);
    }
    if (p.empty() || p.back() != 0) return false;
    p.pop_back();
    top = df - 2;
  }
  if (static_cast<int>(p.size()) - 1 > top) return false;
  p.resize(top + 1, 0);
  int g = top / 2;
  for (int a = 0; a <= top; ++a)
    if (mul_checked(p[a], ipow(q, g)) != mul_checked(ipow(q, a), p[top - a])) return false;
  return p[0] == 1;
}

bool check_rh_bound(const LPoly& L) {
  int df = L.conductor.degree();
  if (df <= 0) return true;
  for (size_t a = 0; a < L.coeffs.size(); ++a) {
    Int b = binom(df - 1, static_cast<int>(a));
    if (mul_checked(L.coeffs[a], L.coeffs[a]) > mul_checked(mul_checked(b, b), ipow(L.q, static_cast<int>(a))))
      return false;
  }
  return true;
}

}  // namespace amds
