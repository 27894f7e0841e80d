#include <gtest/gtest.h>

#include "twring/gl2_case.hpp"
#include "twring/twisted_ring.hpp"
#include "util.hpp"

using namespace twring;
using twring::testing::random_element;

namespace {

std::vector<RingPtr> sample_rings() {
  Cocycle q = q8_twist();
  return {c2c2_ring(), make_ring(q.group, q, 1), make_ring(q.group, q, 4), make_group_ring(dihedral8()),
          make_group_ring(cyclic(3), 3), make_ring(alpha_relations(1).group, alpha_relations(1), 1)};
}

}  // namespace

TEST(TwistedRing, AssociativeAndUnital) {
  std::mt19937_64 rng(1);
  for (const auto& R : sample_rings()) {
    for (int t = 0; t < 25; ++t) {
      TwElement a = random_element(R, rng), b = random_element(R, rng), c = random_element(R, rng);
      EXPECT_EQ((a * b) * c, a * (b * c)) << R->describe();
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(TwElement::one(R) * a, a);
      EXPECT_EQ(a * TwElement::one(R), a);
    }
  }
}

TEST(TwistedRing, BasisProductsFollowCocycle) {
  RingPtr R = c2c2_ring();
  TwElement ug = TwElement::basis(R, 1), uh = TwElement::basis(R, 2);
  EXPECT_EQ(ug * ug, TwElement::one(R));
  EXPECT_EQ(uh * ug, -(ug * uh));
  Cocycle q = q8_twist();
  RingPtr Q = make_ring(q.group, q, 1);
  TwElement ux = TwElement::basis(Q, 1);
  EXPECT_EQ(ux * ux, -TwElement::one(Q));
}

TEST(TwistedRing, UnitsAndTorsion) {
  Cocycle q = q8_twist();
  RingPtr Q = make_ring(q.group, q, 1);
  TwElement ux = TwElement::basis(Q, 1);
  auto inv = is_unit(ux);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * ux, TwElement::one(Q));
  EXPECT_EQ(torsion_order(ux), 4);
  EXPECT_FALSE(is_unit(TwElement::one(Q).scaled(2)));
  EXPECT_FALSE(is_unit(TwElement::one(Q) + ux));  // norm 2
  TwElement v = unit_v();
  EXPECT_TRUE(is_unit(v));
  EXPECT_FALSE(torsion_order(v).has_value());
  EXPECT_EQ(det_unit_sign(regular_rep(v)), 1);
}

TEST(TwistedRing, CoordinatesRoundTrip) {
  std::mt19937_64 rng(5);
  Cocycle q = q8_twist();
  RingPtr R = make_ring(q.group, q, 4);
  for (int t = 0; t < 20; ++t) {
    TwElement a = random_element(R, rng) + random_element(R, rng).scaled(CycInt::root(4, 4, 1));
    EXPECT_EQ(TwElement::from_coords(R, a.coords()), a);
  }
  EXPECT_THROW(TwElement::from_ints(R, {1, 2}), Error);
}

TEST(TwistedRing, CenterPartition) {
  RingPtr R = c2c2_ring();
  auto c = conj_character(*R, 1);
  EXPECT_FALSE(c.alpha_regular());  // u_h anticommutes with u_g
  EXPECT_TRUE(conj_character(*R, 0).alpha_regular());
  auto parts = partition_by_self_twist(*R);
  EXPECT_EQ(g_zero(*R), (IdSet{0, 1, 2}));  // u_gh^2 = -1
  (void)parts;
}

TEST(TwistedRing, ElementDivision) {
  RingPtr R = c2c2_ring();
  TwElement x = TwElement::from_ints(R, {2, 4, -6, 0});
  EXPECT_TRUE(divisible_by(x, 2));
  EXPECT_EQ(exact_div(x, 2), TwElement::from_ints(R, {1, 2, -3, 0}));
  EXPECT_THROW(exact_div(x, 4), Error);
}
