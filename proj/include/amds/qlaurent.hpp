#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "amds/int.hpp"

namespace amds {

// Exact Laurent polynomial in q^{1/2}. Exponents are stored in half-steps:
// index k of the dense buffer is the coefficient of q^{(lo + k)/2}.
class QLaurent {
 public:
  QLaurent() = default;
  explicit QLaurent(Int c) {
    if (c != 0) c_.push_back(c);
  }

  static QLaurent monomial(Int c, int half_exp);
  static QLaurent q_pow(int k) { return monomial(1, 2 * k); }
  static QLaurent one() { return QLaurent(1); }

  bool is_zero() const { return c_.empty(); }
  // Lowest and highest half-step exponent; only meaningful when nonzero.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  Int coeff(int half_exp) const;
  std::vector<std::pair<int, Int>> terms() const;
  size_t num_terms() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent operator-() const;
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  bool operator==(const QLaurent& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  // Multiply by q^{half/2}.
  QLaurent shifted(int half) const;
  QLaurent scaled(Int s) const;
  // Add c * q^{half/2} in place.
  void add_term(int half_exp, Int c);

  bool integral_exponents() const;
  // All exponents are nonnegative integers.
  bool is_polynomial_in_q() const;
  // Every coefficient divisible by d; returns the quotient.
  bool divisible_by(Int d) const;
  QLaurent divided_exact(Int d) const;

  // Value at an integer q; requires a polynomial in q.
  Int eval_poly(Int q) const;
  // Value at an integer q as num / q^den_exp (den_exp >= 0); requires integral exponents.
  std::pair<Int, int> eval_rational(Int q) const;
  // q^d -> P^{total - d}; requires integral exponents.
  QLaurent reflected(int total) const;

  std::string str() const;
  size_t hash() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const QLaurent& p);

}  // namespace amds
