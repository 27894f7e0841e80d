#include <gtest/gtest.h>

#include "twring/gl2_case.hpp"
#include "twring/tower.hpp"
#include "util.hpp"

using namespace twring;
using twring::testing::random_element;

TEST(Tower, LevelsAndMaps) {
  TowerContext c = make_tower(c2c2_ring(), 2);
  EXPECT_EQ(c.rings[1]->order(), 8);
  EXPECT_EQ(c.rings[2]->order(), 16);
  EXPECT_EQ(c.x_id(1, 2), 4);
  EXPECT_EQ(c.x_id(2, 2), 8);
  EXPECT_THROW(c.x_id(2, 1), Error);
  std::mt19937_64 rng(13);
  for (int i = 1; i <= 2; ++i)
    for (int t = 0; t < 15; ++t) {
      TwElement a = random_element(c.rings[i], rng), b = random_element(c.rings[i], rng);
      EXPECT_EQ(tower_psi(c, i, a * b), tower_psi(c, i, a) * tower_psi(c, i, b));
      EXPECT_EQ(tower_phi(c, i, a * b), tower_phi(c, i, a) * tower_phi(c, i, b));
      TwElement lo = random_element(c.rings[i - 1], rng);
      EXPECT_EQ(tower_psi(c, i, tower_embed(c, lo, i)), lo);
      EXPECT_EQ(tower_phi(c, i, tower_embed(c, lo, i)), lo);
    }
}

TEST(Tower, SplitsReconstruct) {
  TowerContext c = make_tower(c2c2_ring(), 2);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    int level = 1 + t % 2;
    TwElement u = random_tower_unit(c, level, rng, 4);
    auto s = split_unit(c, level, u);
    EXPECT_EQ(s.k * s.s, u);
    TwElement y = kernel_embed(c, level, s.k);
    EXPECT_TRUE(u_group_membership(c, 1, level - 1, y));
    TwElement x = u * u;
    ASSERT_TRUE(u_group_membership(c, 1, level, x));
    auto parts = iterated_split(c, 1, level, x);
    EXPECT_EQ(parts.size(), 1u << level);
    for (const auto& p : parts) EXPECT_TRUE(u_group_membership(c, p.k, 0, p.x));
  }
}

TEST(Tower, MembershipRejects) {
  TowerContext c = make_tower(c2c2_ring(), 1);
  TwElement ug = TwElement::basis(c.rings[1], 1);
  EXPECT_FALSE(u_group_membership(c, 1, 1, ug));
  EXPECT_THROW(u_split(c, 1, 1, ug), Error);
  EXPECT_THROW(kernel_embed(c, 1, ug), Error);
}
