#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "amds/int.hpp"

namespace amds {

// Prime field F_p. Non-prime q is rejected.
class FiniteField {
 public:
  explicit FiniteField(int q);
  int q() const { return p_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return static_cast<int>((static_cast<int64_t>(a) * b) % p_); }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int inv(int a) const;
  int pow(int a, int64_t e) const;
  bool is_square(int a) const { return square_[a]; }
  int num_squares() const { return (p_ - 1) / 2; }

 private:
  int p_;
  std::vector<bool> square_;  // nonzero squares
};

// Polynomial over F_p, coefficients low-to-high. The zero polynomial has no
// coefficients and degree -1.
struct FieldPoly {
  std::vector<int> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  int lead() const { return c.empty() ? 0 : c.back(); }
  bool operator==(const FieldPoly& o) const { return c == o.c; }
  bool operator<(const FieldPoly& o) const;
};

FieldPoly poly_trim(FieldPoly f);
FieldPoly poly_add(const FiniteField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_sub(const FiniteField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mul(const FiniteField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_scale(const FiniteField& F, const FieldPoly& a, int s);
std::pair<FieldPoly, FieldPoly> poly_divmod(const FiniteField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mod(const FiniteField& F, const FieldPoly& a, const FieldPoly& m);
FieldPoly poly_powmod(const FiniteField& F, FieldPoly a, Int e, const FieldPoly& m);
FieldPoly poly_gcd(const FiniteField& F, FieldPoly a, FieldPoly b);
FieldPoly poly_monic(const FiniteField& F, const FieldPoly& a);
FieldPoly poly_const(int c);
FieldPoly poly_t();

// Monic polynomial of degree d with lexicographic rank k in [0, q^d).
FieldPoly monic_from_rank(const FiniteField& F, int d, int64_t k);
int64_t monic_rank(const FiniteField& F, const FieldPoly& f);
std::vector<FieldPoly> enumerate_monic(const FiniteField& F, int d);

struct Factorization {
  int unit = 1;
  std::vector<std::pair<FieldPoly, int>> factors;
};

bool is_irreducible(const FiniteField& F, const FieldPoly& f);
// Monic irreducibles of degree exactly d, lexicographic.
std::vector<FieldPoly> monic_irreducibles(const FiniteField& F, int d);
Factorization factor(const FiniteField& F, const FieldPoly& f);
FieldPoly multiply_out(const FiniteField& F, const Factorization& fac);
bool is_squarefree(const FiniteField& F, const FieldPoly& f);

// sgn(f): +1 when the leading coefficient is a square.
int sgn(const FiniteField& F, const FieldPoly& f);
// chi_p(g) for prime p by Euler's criterion.
int chi_prime(const FiniteField& F, const FieldPoly& p, const FieldPoly& g);
// (f/g) for any nonzero f, by factoring f.
int residue_symbol(const FiniteField& F, const FieldPoly& f, const FieldPoly& g);
// (f/g) for monic f, g via reciprocity and Euclid; needs q = 1 mod 4.
int residue_symbol_reciprocity(const FiniteField& F, const FieldPoly& f, const FieldPoly& g);

struct LPoly {
  std::vector<Int> coeffs;  // coefficient of x^d
  FieldPoly conductor;
  int q = 0;
  int conductor_sign = 1;
};

LPoly lfunction(const FiniteField& F, const FieldPoly& f, int max_deg);
bool check_lfe(const LPoly& L);
bool check_rh_bound(const LPoly& L);

}  // namespace amds
