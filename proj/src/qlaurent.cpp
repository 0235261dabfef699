#include "amds/qlaurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace amds {

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Int int_from_string(const std::string& s) {
  if (s.empty()) throw UsageError("empty integer literal");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw UsageError("bad integer literal: " + s);
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw UsageError("bad integer literal: " + s);
    v = add_checked(mul_checked(v, 10), neg ? -(s[i] - '0') : (s[i] - '0'));
  }
  return v;
}

Int ipow(Int base, int e) {
  if (e < 0) throw InternalError("ipow: negative exponent");
  Int r = 1;
  for (int k = 0; k < e; ++k) r = mul_checked(r, base);
  return r;
}

Int binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = mul_checked(r, n - k + i) / i;
  return r;
}

QLaurent QLaurent::monomial(Int c, int half_exp) {
  QLaurent p;
  if (c != 0) {
    p.lo_ = half_exp;
    p.c_.push_back(c);
  }
  return p;
}

Int QLaurent::coeff(int h) const {
  if (c_.empty() || h < lo_ || h > hi()) return 0;
  return c_[h - lo_];
}

std::vector<std::pair<int, Int>> QLaurent::terms() const {
  std::vector<std::pair<int, Int>> out;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) out.emplace_back(lo_ + static_cast<int>(k), c_[k]);
  return out;
}

size_t QLaurent::num_terms() const {
  size_t n = 0;
  for (Int v : c_) n += v != 0;
  return n;
}

void QLaurent::trim() {
  size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<Int>(c_.begin() + b, c_.begin() + e);
    lo_ += static_cast<int>(b);
  }
}

void QLaurent::add_term(int h, Int c) {
  if (c == 0) return;
  if (c_.empty()) {
    lo_ = h;
    c_.assign(1, c);
    return;
  }
  if (h < lo_) {
    c_.insert(c_.begin(), lo_ - h, Int(0));
    lo_ = h;
  } else if (h > hi()) {
    c_.resize(h - lo_ + 1, Int(0));
  }
  Int& slot = c_[h - lo_];
  slot = add_checked(slot, c);
  if (slot == 0 && (h == lo_ || h == hi())) trim();
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int nlo = std::min(lo_, o.lo_);
  int nhi = std::max(hi(), o.hi());
  if (nlo != lo_ || nhi != hi()) {
    std::vector<Int> nc(nhi - nlo + 1, Int(0));
    for (size_t k = 0; k < c_.size(); ++k) nc[lo_ - nlo + k] = c_[k];
    c_.swap(nc);
    lo_ = nlo;
  }
  for (size_t k = 0; k < o.c_.size(); ++k) {
    Int& s = c_[o.lo_ - lo_ + k];
    s = add_checked(s, o.c_[k]);
  }
  trim();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (Int& v : r.c_) v = -v;
  return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] = add_checked(r.c_[i + j], mul_checked(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent QLaurent::shifted(int half) const {
  QLaurent r = *this;
  if (!r.c_.empty()) r.lo_ += half;
  return r;
}

QLaurent QLaurent::scaled(Int s) const {
  if (s == 0) return QLaurent();
  QLaurent r = *this;
  for (Int& v : r.c_) v = mul_checked(v, s);
  return r;
}

bool QLaurent::integral_exponents() const {
  for (auto& [h, c] : terms())
    if (h % 2 != 0) return false;
  return true;
}

bool QLaurent::is_polynomial_in_q() const {
  if (c_.empty()) return true;
  return lo_ >= 0 && integral_exponents();
}

bool QLaurent::divisible_by(Int d) const {
  for (Int v : c_)
    if (v % d != 0) return false;
  return true;
}

QLaurent QLaurent::divided_exact(Int d) const {
  if (!divisible_by(d)) throw InternalError("inexact division of q-polynomial");
  QLaurent r = *this;
  for (Int& v : r.c_) v /= d;
  return r;
}

Int QLaurent::eval_poly(Int q) const {
  if (!is_polynomial_in_q()) throw InternalError("eval_poly on non-polynomial " + str());
  Int acc = 0;
  if (c_.empty()) return 0;
  for (int h = hi(); h >= 0; h -= 2) acc = add_checked(mul_checked(acc, q), coeff(h));
  return acc;
}

std::pair<Int, int> QLaurent::eval_rational(Int q) const {
  if (!integral_exponents()) throw InternalError("eval_rational with half-integral exponents");
  if (c_.empty()) return {0, 0};
  int shift = lo_ < 0 ? -lo_ : 0;  // half-steps, even
  QLaurent p = shifted(shift);
  return {p.eval_poly(q), shift / 2};
}

QLaurent QLaurent::reflected(int total) const {
  if (!integral_exponents()) throw InternalError("reflected: half-integral exponents");
  QLaurent r;
  for (auto& [h, c] : terms()) r.add_term(2 * total - h, c);
  return r;
}

std::string QLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [h, c] : terms()) {
    Int v = c;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    first = false;
    bool unit = v == 1 && h != 0;
    if (!unit) os << to_string(v);
    if (h != 0) {
      if (!unit) os << "*";
      os << "q";
      if (h != 2) {
        if (h % 2 == 0) os << "^" << h / 2;
        else os << "^(" << h << "/2)";
      }
    }
  }
  return os.str();
}

size_t QLaurent::hash() const {
  size_t h = std::hash<int>()(lo_);
  for (Int v : c_) {
    auto lo64 = static_cast<uint64_t>(v);
    auto hi64 = static_cast<uint64_t>(static_cast<unsigned __int128>(v) >> 64);
    h ^= std::hash<uint64_t>()(lo64) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<uint64_t>()(hi64) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const QLaurent& p) { return os << p.str(); }

}  // namespace amds
