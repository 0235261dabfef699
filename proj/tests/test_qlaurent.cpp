#include <gtest/gtest.h>

#include <random>

#include "amds/qlaurent.hpp"

using namespace amds;

namespace {

QLaurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 4), ex(-6, 6), co(-9, 9);
  QLaurent p;
  for (int k = len(rng); k > 0; --k) p.add_term(ex(rng), co(rng));
  return p;
}

}  // namespace

TEST(QLaurent, MonomialsAndHalfSteps) {
  QLaurent a = QLaurent::monomial(3, 5);  // 3 q^{5/2}
  EXPECT_EQ(a.lo(), 5);
  EXPECT_EQ(a.hi(), 5);
  EXPECT_EQ(a.coeff(5), 3);
  EXPECT_FALSE(a.integral_exponents());
  EXPECT_EQ(QLaurent::q_pow(2), QLaurent::monomial(1, 4));
  EXPECT_EQ(a.shifted(-5), QLaurent(3));
  EXPECT_TRUE(QLaurent().is_zero());
}

TEST(QLaurent, CancellationTrims) {
  QLaurent p = QLaurent::q_pow(1) + QLaurent::q_pow(3);
  p -= QLaurent::q_pow(3);
  EXPECT_EQ(p, QLaurent::q_pow(1));
  p -= QLaurent::q_pow(1);
  EXPECT_TRUE(p.is_zero());
}

TEST(QLaurent, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    QLaurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, QLaurent());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(QLaurent, Evaluation) {
  QLaurent p = QLaurent(4) * QLaurent::q_pow(5) + QLaurent(3) * QLaurent::q_pow(6);
  EXPECT_EQ(p.eval_poly(5), 4 * 3125 + 3 * 15625);
  QLaurent r = QLaurent::q_pow(-2) + QLaurent(1);
  auto [num, den] = r.eval_rational(5);
  EXPECT_EQ(den, 2);
  EXPECT_EQ(num, 26);
}

TEST(QLaurent, ReflectionSwapsDegrees) {
  QLaurent p = QLaurent(2) + QLaurent(5) * QLaurent::q_pow(3);
  EXPECT_EQ(p.reflected(3), QLaurent(2) * QLaurent::q_pow(3) + QLaurent(5));
  EXPECT_EQ(p.reflected(3).reflected(3), p);
}

TEST(QLaurent, OverflowIsAnError) {
  QLaurent big(static_cast<Int>(1) << 100);
  EXPECT_THROW(big * big, InternalError);
}

TEST(QLaurent, StringForm) {
  EXPECT_EQ((QLaurent(1) - QLaurent::q_pow(1)).str().empty(), false);
  EXPECT_EQ(to_string(static_cast<Int>(-1234567890123456789LL) * 1000), "-1234567890123456789000");
  EXPECT_EQ(int_from_string("-1234567890123456789000"), static_cast<Int>(-1234567890123456789LL) * 1000);
}
