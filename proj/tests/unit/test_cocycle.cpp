#include <gtest/gtest.h>

#include <random>

#include "twring/cocycle.hpp"
#include "twring/gl2_case.hpp"

using namespace twring;

namespace {

Cochain random_cochain(int n, int m, std::mt19937_64& rng) {
  Cochain f{m, std::vector<int>(n)};
  for (int g = 1; g < n; ++g) f.values[g] = static_cast<int>(rng() % m);
  return f;
}

}  // namespace

TEST(Cocycle, TrivialAndNamedValidate) {
  EXPECT_TRUE(validate_cocycle(trivial_cocycle(dihedral8())).ok());
  EXPECT_TRUE(validate_cocycle(q8_twist()).ok());
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(validate_cocycle(alpha_relations(n)).ok());
}

TEST(Cocycle, DetectsFailures) {
  auto g = elementary_abelian_2(2);
  Cocycle bad(g, 2, std::vector<std::vector<int>>{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  auto r = validate_cocycle(bad);
  EXPECT_FALSE(r.cocycle_ok);
  ASSERT_TRUE(r.violation.has_value());
  Cocycle unnorm(g, 2, std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  EXPECT_FALSE(validate_cocycle(unnorm).normalized);
  EXPECT_THROW(require_cocycle(bad, "test"), Error);
  EXPECT_THROW(Cocycle(g, 2, std::vector<int>{0, 0, 0}), Error);
}

TEST(Cocycle, CoboundaryTwistsStayCohomologous) {
  std::mt19937_64 rng(3);
  Cocycle a = with_modulus(alpha_relations(0), 4);
  for (int t = 0; t < 20; ++t) {
    Cochain f = random_cochain(4, 4, rng);
    Cocycle b = coboundary_twist(a, f);
    EXPECT_TRUE(validate_cocycle(b).ok());
    auto w = are_cohomologous(a, b, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(coboundary_twist(a, *w), b);
  }
}

TEST(Cocycle, ProductsPowersOrders) {
  Cocycle q = q8_twist();
  EXPECT_EQ(cocycle_order(q), 2);
  EXPECT_TRUE(cocycle_power(q, 2).is_trivial_table() || cocycle_order(cocycle_power(q, 2)) == 1);
  EXPECT_TRUE(validate_cocycle(cocycle_product(q, with_modulus(q, 4))).ok());
  EXPECT_EQ(cocycle_order(trivial_cocycle(cyclic(5))), 1);
  // same class over mu_4, different classes over mu_2
  Cocycle r(q.group, alpha_relations(0).m, alpha_relations(0).table);
  EXPECT_TRUE(are_cohomologous(r, q, 4).has_value());
  EXPECT_FALSE(are_cohomologous(r, q, 2).has_value());
  EXPECT_FALSE(are_cohomologous(r, trivial_cocycle(q.group), 4).has_value());
}

TEST(Cocycle, GAlphaMatchesExtension) {
  GAlpha r = build_G_alpha(alpha_relations(0));
  EXPECT_EQ(r.group->order(), 8);
  EXPECT_EQ(r.group->order_histogram(), (std::map<int, int>{{1, 1}, {2, 5}, {4, 2}}));
  GAlpha q = build_G_alpha(q8_twist());
  EXPECT_TRUE(q.group->is_hamiltonian());
  GAlpha t = build_G_alpha(trivial_cocycle(cyclic(3)));
  EXPECT_EQ(t.group->order(), 3);
}

TEST(Cocycle, InflationAndRestriction) {
  auto p = direct_product(*elementary_abelian_2(2), *cyclic(2));
  std::vector<int> pr(8);
  for (int x = 0; x < 8; ++x) pr[x] = x % 4;
  Cocycle inf = inflate(alpha_relations(0), make_hom(p, elementary_abelian_2(2), pr));
  EXPECT_TRUE(validate_cocycle(inf).ok());
  auto res = restrict_to(inf, IdSet{0, 1, 2, 3});
  EXPECT_TRUE(validate_cocycle(res.cocycle).ok());
  EXPECT_EQ(self_twist(q8_twist(), 1), 1);     // u_x^2 = -1
  EXPECT_EQ(self_twist(alpha_relations(0), 1), 0);
}
