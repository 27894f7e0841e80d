#include <gtest/gtest.h>

#include <random>

#include "twring/gl2_case.hpp"

using namespace twring;

TEST(Gl2Case, MatrixArithmetic) {
  IntMat2 m{2, 1, 1, 1};
  EXPECT_EQ(m.det(), 1);
  EXPECT_EQ(m * m.inverse(), IntMat2::identity());
  EXPECT_EQ((IntMat2{3, 4, 1, 3}).mod(2), (IntMat2{1, 0, 1, 1}));
  EXPECT_TRUE((IntMat2{1, 2, 0, 1}).in_dtilde());
  EXPECT_FALSE((IntMat2{1, 1, 0, 1}).in_dtilde());
  EXPECT_THROW((IntMat2{2, 0, 0, 1}).inverse(), Error);
}

TEST(Gl2Case, PhiIsRingIsomorphismOnSamples) {
  RingPtr R = c2c2_ring();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::int64_t> a(4), b(4);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 9) - 4;
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % 9) - 4;
    TwElement x = TwElement::from_ints(R, a), y = TwElement::from_ints(R, b);
    EXPECT_EQ(phi_model(x * y), phi_model(x) * phi_model(y));
    EXPECT_EQ(*phi_inverse(phi_model(x)), x);
  }
}

TEST(Gl2Case, SanovWords) {
  EXPECT_EQ(sanov_evaluate("VW"), sanov_letter('V') * sanov_letter('W'));
  EXPECT_TRUE(sanov_reduced("VWvw"));
  EXPECT_FALSE(sanov_reduced("Vv"));
  std::mt19937_64 rng(23);
  const char L[] = "VWvw";
  for (int t = 0; t < 200; ++t) {
    std::string w;
    for (int k = 0; k < 10; ++k) {
      char c = L[rng() % 4];
      if (!w.empty() && std::tolower(w.back()) == std::tolower(c) && w.back() != c) continue;
      w += c;
    }
    auto back = sanov_membership(sanov_evaluate(w));
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, w);
  }
  EXPECT_FALSE(sanov_membership(IntMat2{1, 1, 0, 1}).has_value());
  EXPECT_FALSE(sanov_membership(IntMat2{-1, 0, 0, -1}).has_value());
  auto sc = sanov_scan(6);
  EXPECT_EQ(sc.words, 1 + 4 * (729 - 1) / 2);
  EXPECT_EQ(sc.round_trip_failures, 0);
}

TEST(Gl2Case, ToddCoxeter) {
  EXPECT_EQ(todd_coxeter(1, {"aaaa"}, {}, 1000), 4);
  EXPECT_EQ(todd_coxeter(2, {"aaa", "bb", "abab"}, {}, 1000), 6);  // S3
  EXPECT_EQ(todd_coxeter(2, {"aaa", "bb", "abab"}, {"b"}, 1000), 3);
  EXPECT_EQ(todd_coxeter(4, unit_group_relators(), {"c", "d"}, 100000), 8);
  EXPECT_EQ(nielsen_schreier(2, 8), 9);
}

TEST(Gl2Case, UnitWordsEvaluateBack) {
  TwElement v = unit_v(), w = unit_w();
  for (const auto& u : {v, w, v * w, w * v * v, v * TwElement::basis(v.ring(), 1)}) {
    std::string word = unit_word(u);
    EXPECT_FALSE(word.empty());
  }
  auto audit = unit_index_audit({TwElement::basis(v.ring(), 1), TwElement::basis(v.ring(), 2), v, w});
  EXPECT_EQ(audit.index, 1);
}

TEST(Gl2Case, Congruence) {
  EXPECT_EQ(gl2_mod_order(2), 6);
  EXPECT_EQ(gl2_mod_order(4), 96);
  EXPECT_EQ(gl2_mod_order(8), 1536);
  auto r1 = congruence_index(1), r2 = congruence_index(2);
  EXPECT_EQ(r1.image_order, 6);
  EXPECT_EQ(r2.image_order, 96);
  EXPECT_EQ(r1.gamma_step, 16);
  EXPECT_EQ(r2.gamma_step, r2.gamma_to_u * r2.u_to_gamma_next);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(congruence_index(i).u_step, 8);
}

TEST(Gl2Case, D8Family) {
  for (int n = 0; n <= 2; ++n) {
    D8Family f = d8_family(n);
    EXPECT_EQ(f.psi.source->order(), 8 << n);
    EXPECT_EQ(f.psi.target->order(), 4 << n);
    EXPECT_EQ(apply_psi(f.psi, f.b1), f.v * f.v);
    EXPECT_EQ(apply_psi(f.psi, f.b2), f.w * f.w);
    EXPECT_EQ(f.cokernel_candidates.size(), static_cast<size_t>(n + 1));
  }
  EXPECT_TRUE(d8_commutation_square(d8_family(2), d8_family(0)));
  EXPECT_TRUE(d8_commutation_square(d8_family(1), d8_family(0)));
}
