#include <gtest/gtest.h>

#include "twring/group.hpp"

using namespace twring;

TEST(Group, PresetsHaveExpectedShape) {
  auto d8 = dihedral8();
  EXPECT_EQ(d8->order(), 8);
  EXPECT_FALSE(d8->is_abelian());
  EXPECT_EQ(d8->order_histogram(), (std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_EQ(d8->center(), (IdSet{0, 2}));

  auto q8 = quaternion8();
  EXPECT_EQ(q8->order_histogram(), (std::map<int, int>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_TRUE(q8->is_hamiltonian());
  EXPECT_FALSE(d8->is_hamiltonian());

  EXPECT_EQ(cyclic(6)->exponent(), 6);
  EXPECT_EQ(elementary_abelian_2(3)->exponent(), 2);
  EXPECT_EQ(cyclic(4)->cyclic_subgroups().size(), 3u);
}

TEST(Group, IdentityIsIdZeroAndInversesWork) {
  for (auto g : {dihedral8(), quaternion8(), cyclic(7), direct_product(*cyclic(3), *dihedral8())}) {
    for (int x = 0; x < g->order(); ++x) {
      EXPECT_EQ(g->mul(0, x), x);
      EXPECT_EQ(g->mul(x, g->inv(x)), 0);
    }
  }
}

TEST(Group, MalformedTablesRejected) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), Error);             // not a Latin square
  EXPECT_THROW(FiniteGroup({{1, 0}, {0, 1}}), Error);             // id 0 is not the identity
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {1, 2}, {2, 0, 1}}), Error);  // ragged
  // Latin square with identity but not associative
  EXPECT_THROW(FiniteGroup({{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 4, 0, 1, 3},
                            {3, 2, 4, 0, 1},
                            {4, 3, 1, 2, 0}}),
               Error);
  EXPECT_THROW(build_preset("no_such_group", {}), Error);
}

TEST(Group, SubgroupsQuotientsHoms) {
  auto d8 = dihedral8();
  IdSet rot{0, 1, 2, 3};
  EXPECT_TRUE(d8->is_subgroup(rot));
  EXPECT_TRUE(d8->is_normal(rot));
  EXPECT_FALSE(d8->is_central(rot));
  IdSet refl{0, 4};
  EXPECT_TRUE(d8->is_subgroup(refl));
  EXPECT_FALSE(d8->is_normal(refl));
  EXPECT_EQ(d8->generated({1, 4}).size(), 8u);

  auto q = quotient(d8, d8->center());
  EXPECT_EQ(q.group->order(), 4);
  EXPECT_TRUE(q.group->is_abelian());
  EXPECT_EQ(q.proj.kernel(), d8->center());
  EXPECT_TRUE(q.proj.surjective());

  auto s = least_section(q.proj);
  for (int g = 0; g < 4; ++g) EXPECT_EQ(q.proj(s(g)), g);
  EXPECT_THROW(make_hom(cyclic(4), cyclic(2), {0, 1, 1, 0}), Error);
}

TEST(Group, DirectProductIds) {
  auto p = direct_product(*dihedral8(), *cyclic(2));
  EXPECT_EQ(p->order(), 16);
  // id = d + 8 * c
  EXPECT_EQ(p->mul(1, 8), 9);
  EXPECT_EQ(p->center().size(), 4u);
}
