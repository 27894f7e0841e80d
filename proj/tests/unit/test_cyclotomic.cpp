#include <gtest/gtest.h>

#include <random>

#include "twring/cyclotomic.hpp"
#include "twring/group.hpp"

using namespace twring;

namespace {

CycInt random_cyc(int m, std::mt19937_64& rng) {
  CycInt x(m);
  for (int k = 0; k < roots_order(m); ++k)
    if (rng() % 3 == 0) x += CycInt::root(m, roots_order(m), k).scaled(static_cast<std::int64_t>(rng() % 7) - 3);
  return x;
}

}  // namespace

TEST(Cyclotomic, Basics) {
  EXPECT_EQ(roots_order(3), 6);
  EXPECT_EQ(roots_order(4), 4);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_THROW(CycInt(25), Error);
  EXPECT_EQ(lcm_conductor(4, 6), 12);
  EXPECT_EQ(lcm_conductor(8, 3), 24);
  EXPECT_FALSE(conductor_supported(5));
}

TEST(Cyclotomic, RootsMultiply) {
  for (int m : {1, 2, 3, 4, 6, 8, 12, 24}) {
    int n = roots_order(m);
    CycInt z = CycInt::root(m, n, 1), p(m, 1);
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(p, CycInt::root(m, n, k));
      auto r = is_root_of_unity(p);
      ASSERT_TRUE(r.has_value());
      p = p * z;
    }
    EXPECT_EQ(p, CycInt(m, 1));
  }
}

TEST(Cyclotomic, RingAxiomsRandom) {
  std::mt19937_64 rng(7);
  for (int m : {3, 4, 8, 12}) {
    for (int t = 0; t < 50; ++t) {
      CycInt a = random_cyc(m, rng), b = random_cyc(m, rng), c = random_cyc(m, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Cyclotomic, GaloisIsRingMap) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    CycInt a = random_cyc(12, rng), b = random_cyc(12, rng);
    for (int j : {5, 7, 11}) {
      EXPECT_EQ(galois_apply(a * b, j), galois_apply(a, j) * galois_apply(b, j));
      EXPECT_EQ(galois_apply(a + b, j), galois_apply(a, j) + galois_apply(b, j));
    }
  }
}

TEST(Cyclotomic, DivisionAndLifting) {
  CycInt z = CycInt::root(4, 4, 1);
  CycInt x = (z + CycInt(4, 1)).scaled(6);
  EXPECT_TRUE(divisible_by(x, 3));
  EXPECT_FALSE(divisible_by(x, 4));
  EXPECT_EQ(exact_div(x, 2).scaled(2), x);
  EXPECT_THROW(exact_div(x, 4), Error);
  EXPECT_EQ(z.lifted(8) * z.lifted(8), CycInt(8, -1));
  EXPECT_FALSE(is_root_of_unity(CycInt(4, 2)).has_value());
  EXPECT_TRUE(CycInt(3, -1).is_integer());
}

TEST(Cyclotomic, OverflowIsChecked) {
  EXPECT_THROW(mul_ck(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
  EXPECT_THROW(add_ck(INT64_MAX, 1), std::overflow_error);
}
