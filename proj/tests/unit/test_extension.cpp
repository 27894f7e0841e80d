#include <gtest/gtest.h>

#include "twring/extension.hpp"
#include "twring/gl2_case.hpp"
#include "util.hpp"

using namespace twring;
using twring::testing::random_element;

namespace {

ExtensionData d8_center() { return build_extension(dihedral8(), dihedral8()->center()); }

LinearCharacter sign_on_center(const ExtensionData& e) {
  LinearCharacter chi{e.normal.group, 2, std::vector<int>(e.normal.group->order(), 0)};
  chi.values[1] = 1;
  return chi;
}

}  // namespace

TEST(Extension, BuildAndTransgress) {
  ExtensionData e = d8_center();
  EXPECT_EQ(e.quotient()->order(), 4);
  EXPECT_TRUE(e.central());
  for (int g = 0; g < e.total->order(); ++g) {
    auto [n, q] = e.decompose(g);
    EXPECT_EQ(e.total->mul(e.normal.embed[n], e.section(q)), g);
  }
  Cocycle t = transgress(e, sign_on_center(e));
  EXPECT_TRUE(validate_cocycle(t).ok());
  EXPECT_EQ(build_G_alpha(t).group->order_histogram(), dihedral8()->order_histogram());
  EXPECT_TRUE(character_invariant(e, sign_on_center(e)));
  EXPECT_THROW(build_extension(dihedral8(), IdSet{0, 4}), Error);  // not normal
}

TEST(Extension, PsiIsSurjectiveRingMap) {
  ExtensionData e = d8_center();
  PsiMap p = make_psi(e, sign_on_center(e));
  EXPECT_FALSE(psi_multiplicativity_failure(p).has_value());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    TwElement a = random_element(p.source, rng), b = random_element(p.source, rng);
    EXPECT_EQ(apply_psi(p, a * b), apply_psi(p, a) * apply_psi(p, b));
    EXPECT_EQ(apply_psi(p, a + b), apply_psi(p, a) + apply_psi(p, b));
  }
  EXPECT_TRUE(apply_psi(p, TwElement::one(p.source)).is_one());
}

TEST(Extension, KernelBasisAndDecomposition) {
  ExtensionData e = d8_center();
  PsiMap p = make_psi(e, sign_on_center(e));
  auto kb = kernel_basis(p);
  EXPECT_EQ(kb.size(), 4u);  // (|N| - 1) |G|
  for (const auto& k : kb) EXPECT_TRUE(apply_psi(p, k).is_zero());
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    TwElement x(p.source);
    std::vector<CycInt> want;
    for (const auto& k : kb) {
      std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
      x += k.scaled(c);
      want.push_back(CycInt(1, c));
    }
    auto got = decompose_kernel(p, x);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, want);
  }
  EXPECT_FALSE(decompose_kernel(p, TwElement::one(p.source)).has_value());
}

TEST(Extension, KernelTorsionAndPredicate) {
  ExtensionData e = d8_center();
  PsiMap p = make_psi(e, sign_on_center(e));
  EXPECT_EQ(torsion_kernel_units(p).size(), 2u);
  auto v = kernel_finiteness_predicate(p);
  EXPECT_TRUE(v.finite);
  EXPECT_NE(v.clause.find("cyclic of prime order"), std::string::npos);
}

TEST(Extension, LinearCharacters) {
  EXPECT_EQ(lin_characters(cyclic(4), 2).size(), 2u);
  EXPECT_EQ(lin_characters(cyclic(4), 4).size(), 4u);
  EXPECT_EQ(lin_characters(elementary_abelian_2(2), 2).size(), 4u);
  EXPECT_EQ(lin_characters(cyclic(3), 2).size(), 1u);
  EXPECT_EQ(lin_characters(cyclic(6), 6).size(), 6u);
}

TEST(Extension, ComponentsAndFields) {
  EXPECT_EQ(field_conductor(2), 1);
  EXPECT_EQ(field_conductor(6), 3);
  EXPECT_EQ(field_conductor(4), 4);
  EXPECT_EQ(field_degree(12), 4);
  auto t = component_table(d8_center(), std::nullopt, 1);
  EXPECT_TRUE(t.identity_holds());
  EXPECT_EQ(t.rows.size(), 2u);
  auto pw = perlis_walker(*cyclic(4), 4);  // over Q(i): four copies of Q(i)
  EXPECT_EQ(pw.dim_sum, 4);
  EXPECT_EQ(pw.a.at(4), 2);
}
