#include "amds/series.hpp"

#include <algorithm>
#include <sstream>

namespace amds {

TruncSeries TruncSeries::one(int nvars, int bound) {
  TruncSeries s(nvars, bound);
  s.set(Exp(nvars, 0), QLaurent(1));
  return s;
}

TruncSeries TruncSeries::monomial(int nvars, int bound, const Exp& e, const QLaurent& c) {
  TruncSeries s(nvars, bound);
  s.add(e, c);
  return s;
}

bool TruncSeries::in_range(const Exp& e) const {
  if (static_cast<int>(e.size()) != nvars_) return false;
  if (total_degree(e) > bound_) return false;
  for (int v : e)
    if (v < -window_) return false;
  return true;
}

void TruncSeries::add(const Exp& e, const QLaurent& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars_) throw InternalError("exponent arity mismatch");
  if (total_degree(e) > bound_) return;
  for (int v : e)
    if (v < -window_) throw WindowOverflow("term below negative window");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent TruncSeries::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QLaurent() : it->second;
}

void TruncSeries::set(const Exp& e, const QLaurent& c) {
  terms_.erase(e);
  add(e, c);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  for (auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  for (auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.nvars_ != b.nvars_) throw InternalError("series arity mismatch");
  TruncSeries r(a.nvars_, std::min(a.bound_, b.bound_), std::max(a.window_, b.window_));
  Exp e(a.nvars_);
  for (auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > r.bound_) break;  // graded order
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add(e, ca * cb);
    }
  }
  return r;
}

TruncSeries TruncSeries::scaled(const QLaurent& c) const {
  TruncSeries r(nvars_, bound_, window_);
  for (auto& [e, v] : terms_) r.add(e, v * c);
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return nvars_ == o.nvars_ && bound_ == o.bound_ && terms_ == o.terms_;
}

TruncSeries TruncSeries::with_bound(int b) const {
  TruncSeries r(nvars_, b, window_);
  for (auto& [e, c] : terms_) r.add(e, c);
  return r;
}

bool TruncSeries::has_negative_exponent() const {
  for (auto& [e, c] : terms_)
    for (int v : e)
      if (v < 0) return true;
  return false;
}

TruncSeries TruncSeries::inverse() const {
  if (has_negative_exponent()) throw InternalError("inverse of a series with negative exponents");
  QLaurent c0 = coeff(Exp(nvars_, 0));
  auto t = c0.terms();
  if (t.size() != 1 || (t[0].second != 1 && t[0].second != -1))
    throw InternalError("inverse: constant term is not a unit");
  QLaurent c0inv = QLaurent::monomial(t[0].second, -t[0].first);
  // 1/S = c0^{-1} sum_k (-U)^k with U = c0^{-1} S - 1.
  TruncSeries u = scaled(c0inv);
  u.set(Exp(nvars_, 0), QLaurent());
  TruncSeries neg_u = u.scaled(QLaurent(-1));
  TruncSeries acc = TruncSeries::one(nvars_, bound_);
  TruncSeries power = TruncSeries::one(nvars_, bound_);
  for (int k = 1; k <= bound_; ++k) {
    power = power * neg_u;
    if (power.terms_.empty()) break;
    acc += power;
  }
  return acc.scaled(c0inv);
}

TruncSeries TruncSeries::euler_operator() const {
  TruncSeries r(nvars_, bound_, window_);
  for (auto& [e, c] : terms_) r.add(e, c.scaled(total_degree(e)));
  return r;
}

static std::string exp_str(const Exp& e) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
  os << ")";
  return os.str();
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]x^" << exp_str(e);
  }
  if (first) os << "0";
  os << " + O(deg>" << bound_ << ")";
  return os.str();
}

// ---------------------------------------------------------------- products

void ZetaProduct::add(int mu2, const Exp& nu, Int lambda) {
  if (lambda == 0) return;
  if (nvars_ == 0) nvars_ = static_cast<int>(nu.size());
  if (static_cast<int>(nu.size()) != nvars_) throw InternalError("zeta factor arity mismatch");
  if (std::all_of(nu.begin(), nu.end(), [](int v) { return v == 0; }))
    throw InternalError("zeta factor with nu = 0");
  Key k{nu, mu2};
  auto it = f_.find(k);
  if (it == f_.end()) {
    f_.emplace(k, lambda);
  } else {
    it->second = add_checked(it->second, lambda);
    if (it->second == 0) f_.erase(it);
  }
}

void ZetaProduct::add(const ZetaProduct& o) {
  for (auto& [k, l] : o.f_) add(k.mu2, k.nu, l);
}

ZetaProduct ZetaProduct::inverse() const {
  ZetaProduct r(nvars_);
  for (auto& [k, l] : f_) r.add(k.mu2, k.nu, -l);
  return r;
}

Int ZetaProduct::lambda(int mu2, const Exp& nu) const {
  auto it = f_.find(Key{nu, mu2});
  return it == f_.end() ? Int(0) : it->second;
}

std::vector<ZetaFactor> ZetaProduct::factors() const {
  std::vector<ZetaFactor> out;
  for (auto& [k, l] : f_) out.push_back({k.mu2, k.nu, l});
  return out;
}

ZetaProduct ZetaProduct::truncated(int b) const {
  ZetaProduct r(nvars_);
  for (auto& [k, l] : f_)
    if (total_degree(k.nu) <= b) r.add(k.mu2, k.nu, l);
  return r;
}

std::string ZetaProduct::str() const {
  std::ostringstream os;
  for (auto& [k, l] : f_) {
    os << "(1 - q^";
    if (k.mu2 % 2 == 0) os << k.mu2 / 2;
    else os << "(" << k.mu2 << "/2)";
    os << " x^" << exp_str(k.nu) << ")^" << to_string(-l) << " ";
  }
  return os.str();
}

Int zeta_binomial(Int lambda, int k) {
  Int c = 1;
  for (int j = 1; j <= k; ++j) c = mul_checked(c, lambda + j - 1) / j;
  return c;
}

TruncSeries expand(const ZetaProduct& p, int bound) {
  int n = p.nvars();
  TruncSeries s = TruncSeries::one(n, bound);
  for (const auto& f : p.factors()) {
    int d = total_degree(f.nu);
    if (d > bound) continue;
    for (int v : f.nu)
      if (v < 0) throw InternalError("expand: factor with negative exponent");
    TruncSeries g(n, bound);
    Exp e(n, 0);
    for (int k = 0; k * d <= bound; ++k) {
      for (int j = 0; j < n; ++j) e[j] = k * f.nu[j];
      g.add(e, QLaurent::monomial(zeta_binomial(f.lambda, k), k * f.mu2));
    }
    s = s * g;
  }
  return s;
}

ZetaProduct factorize(const TruncSeries& s, int bound) {
  int n = s.nvars();
  if (s.has_negative_exponent()) throw InternalError("factorize: negative exponents");
  if (s.coeff(Exp(n, 0)) != QLaurent(1)) throw InternalError("factorize: constant term is not 1");
  TruncSeries sb = s.with_bound(bound);
  // |nu| * log(S)_nu = (theta S / S)_nu, which is integral.
  TruncSeries w = sb.euler_operator() * sb.inverse();
  std::map<Exp, QLaurent, GradedLess> work(w.terms().begin(), w.terms().end());
  ZetaProduct out(n);
  for (auto it = work.begin(); it != work.end(); ++it) {
    const Exp& nu = it->first;
    int d = total_degree(nu);
    if (d == 0) continue;
    const QLaurent& r = it->second;
    if (r.is_zero()) continue;
    if (!r.divisible_by(d)) throw InternalError("series is not a zeta-product over Z");
    for (auto& [h, c] : r.terms()) {
      Int lam = c / d;
      out.add(h, nu, lam);
      Exp e(n);
      for (int k = 2; k * d <= bound; ++k) {
        for (int j = 0; j < n; ++j) e[j] = k * nu[j];
        work[e] -= QLaurent::monomial(mul_checked(lam, d), k * h);
      }
    }
  }
  return out;
}

TruncSeries diagonal_part(const TruncSeries& s, const Exp& dir) {
  int dd = total_degree(dir);
  if (dd <= 0) throw InternalError("diagonal_part: bad direction");
  for (int v : dir)
    if (v < 0) throw InternalError("diagonal_part: negative direction");
  TruncSeries r(1, s.bound() / dd);
  for (auto& [e, c] : s.terms()) {
    int m = -1;
    bool ok = true;
    for (size_t k = 0; k < e.size() && ok; ++k) {
      if (dir[k] == 0) {
        ok = e[k] == 0;
      } else {
        if (e[k] % dir[k] != 0) ok = false;
        else if (m < 0) m = e[k] / dir[k];
        else ok = m == e[k] / dir[k];
      }
    }
    if (ok && m >= 0) r.add(Exp{m}, c);
  }
  return r;
}

Exp MonomialMap::apply(const Exp& nu) const {
  Exp out(matrix.size(), 0);
  for (size_t i = 0; i < matrix.size(); ++i)
    for (size_t j = 0; j < nu.size(); ++j) out[i] += matrix[i][j] * nu[j];
  return out;
}

int MonomialMap::shift_of(const Exp& nu) const {
  int s = 0;
  for (size_t j = 0; j < nu.size() && j < shift2.size(); ++j) s += shift2[j] * nu[j];
  return s;
}

SubstResult substitute(const TruncSeries& s, const MonomialMap& m, int out_bound, int out_window) {
  SubstResult r{TruncSeries(static_cast<int>(m.matrix.size()), out_bound, out_window), 0};
  for (auto& [e, c] : s.terms()) {
    Exp img = m.apply(e);
    if (total_degree(img) > out_bound) {
      ++r.dropped_above_bound;
      continue;
    }
    r.image.add(img, c.shifted(m.shift_of(e)));
  }
  return r;
}

// ------------------------------------------------------------ rational mode

namespace {

using RPoly = std::map<int, Rational>;

Rational to_rational(Int v) { return Rational(boost::multiprecision::cpp_int(to_string(v))); }

void rpoly_add(RPoly& a, const RPoly& b, const Rational& scale) {
  for (auto& [h, c] : b) {
    Rational& s = a[h];
    s += c * scale;
    if (s == 0) a.erase(h);
  }
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
  RPoly r;
  for (auto& [ha, ca] : a)
    for (auto& [hb, cb] : b) {
      Rational& s = r[ha + hb];
      s += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

RatSeries log_rational(const TruncSeries& s) {
  if (s.coeff(Exp(s.nvars(), 0)) != QLaurent(1)) throw InternalError("log: constant term is not 1");
  TruncSeries w = s.euler_operator() * s.inverse();
  RatSeries l{s.nvars(), s.bound(), {}};
  for (auto& [e, c] : w.terms()) {
    int d = total_degree(e);
    if (d == 0) continue;
    RPoly p;
    for (auto& [h, v] : c.terms()) p[h] = to_rational(v) / d;
    l.terms.emplace(e, p);
  }
  return l;
}

TruncSeries exp_rational(const RatSeries& l) {
  int n = l.nvars;
  std::map<Exp, RPoly, GradedLess> e;
  e[Exp(n, 0)] = RPoly{{0, Rational(1)}};
  for (int d = 1; d <= l.bound; ++d) {
    std::map<Exp, RPoly, GradedLess> level;
    for (auto& [nu1, c1] : l.terms) {
      int d1 = total_degree(nu1);
      if (d1 > d) break;
      for (auto& [nu2, c2] : e) {
        int d2 = total_degree(nu2);
        if (d2 > d - d1) break;
        if (d2 != d - d1) continue;
        Exp nu(n);
        for (int k = 0; k < n; ++k) nu[k] = nu1[k] + nu2[k];
        rpoly_add(level[nu], rpoly_mul(c1, c2), Rational(d1) / d);
      }
    }
    for (auto& [nu, p] : level)
      if (!p.empty()) e[nu] = p;
  }
  TruncSeries out(n, l.bound);
  for (auto& [nu, p] : e) {
    QLaurent c;
    for (auto& [h, v] : p) {
      if (denominator(v) != 1) throw InternalError("exp: non-integral coefficient");
      c.add_term(h, int_from_string(numerator(v).str()));
    }
    out.add(nu, c);
  }
  return out;
}

bool rat_series_is_integral(const RatSeries& l) {
  for (auto& [nu, p] : l.terms)
    for (auto& [h, v] : p)
      if (denominator(v) != 1) return false;
  return true;
}

}  // namespace amds
