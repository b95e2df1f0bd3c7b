#include <gtest/gtest.h>

#include <random>

#include "fano4/bott.hpp"
#include "fano4/characters.hpp"

using namespace fano;

namespace {
std::string dec5(const ClassFunction& c) { return format_decomposition(5, decompose(c)); }
}  // namespace

TEST(Characters, TableShape) {
  const auto& t5 = character_table(5);
  EXPECT_EQ(t5.classes.size(), 7u);
  long long total = 0;
  for (auto s : t5.sizes) total += s;
  EXPECT_EQ(total, 120);
  EXPECT_TRUE(orthogonality_holds(t5));
  EXPECT_TRUE(orthogonality_holds(character_table(6)));
  EXPECT_EQ(partitions(6).size(), 11u);
}

TEST(Characters, MurnaghanNakayama) {
  EXPECT_EQ(mn_character({4, 1}, {1, 1, 1, 1, 1}), 4);
  EXPECT_EQ(mn_character({3, 2}, {5}), 0);
  EXPECT_EQ(mn_character({2, 2, 1}, {2, 1, 1, 1}), -1);
  EXPECT_EQ(mn_character({1, 1, 1, 1, 1}, {2, 1, 1, 1}), -1);
}

TEST(Characters, S5Plethysms) {
  EXPECT_EQ(dec5(sym_square(s5_irrep("U4"))), "U1+U4+U5");
  EXPECT_EQ(dec5(alt_square(s5_irrep("U5"))), "U4-+U6");
  EXPECT_EQ(dec5(alt_square(s5_irrep("U4"))), "U6");
  EXPECT_EQ(s5_multiplicities(sym_square(alt_square(s5_irrep("U5")))).at("U4-"), 1);
  EXPECT_EQ(dec5(permutation_character(5)), "U1+U4");
}

TEST(Characters, Labels) {
  EXPECT_EQ(s5_partition("U4-"), (Partition{2, 1, 1, 1}));
  EXPECT_EQ(s5_label({3, 1, 1}), "U6");
  EXPECT_THROW(s5_partition("U7"), std::exception);
}

TEST(Characters, NotACharacter) {
  ClassFunction half = irreducible(5, {5});
  for (auto& x : half.v) x /= 2;
  EXPECT_THROW(decompose(half), NotACharacter);
}

TEST(Bott, Basics) {
  BottResult b = bott(GrassWeight{2, 4, {1, 0, 0, 0}});
  EXPECT_FALSE(b.zero);
  EXPECT_EQ(b.degree, 0);
  EXPECT_EQ(b.dim, 4);
  // O(-1) on G(2,4) is acyclic
  EXPECT_TRUE(bott(GrassWeight{2, 4, {-1, -1, 0, 0}}).zero);
  // canonical bundle: h^4 = 1
  BottResult k = bott(canonical_weight(2, 4));
  EXPECT_EQ(k.degree, 4);
  EXPECT_EQ(k.dim, 1);
}

TEST(Bott, WeylDimension) {
  EXPECT_EQ(weyl_dimension({1, 1, 0, 0, 0}), 10);
  EXPECT_EQ(weyl_dimension({2, 0, 0}), 6);
}

TEST(Bott, LittlewoodRichardson) {
  auto t = gl_tensor({1, 0}, {1, 0});
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.at({2, 0}), 1);
  EXPECT_EQ(t.at({1, 1}), 1);
}

TEST(Bott, SerreDuality) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    GrassWeight w{3, 5, std::vector<int>(5)};
    for (int& x : w.w) x = d(rng);
    std::sort(w.w.begin(), w.w.begin() + 3, std::greater<int>());
    std::sort(w.w.begin() + 3, w.w.end(), std::greater<int>());
    GrassWeight v = dual(w), k = canonical_weight(3, 5);
    for (int i = 0; i < 5; ++i) v.w[i] += k.w[i];
    BottResult a = bott(w), b = bott(v);
    ASSERT_EQ(a.zero, b.zero) << w.str();
    if (!a.zero) {
      EXPECT_EQ(a.degree + b.degree, 6);
      EXPECT_EQ(a.dim, b.dim);
    }
  }
}

TEST(Koszul, Sections) {
  EXPECT_EQ(format_cohomology(cohomology(bundle_O(1, 1))), "h0=60");
  EXPECT_EQ(rank(bundle_E()), 6);
  EXPECT_EQ(rank(lambda_E_dual(3)), 20);
  KoszulReport r = koszul_sections_and_rigidity();
  EXPECT_EQ(r.h0_anticanonical, 40);
  EXPECT_TRUE(r.twisted_vanishing);
  EXPECT_TRUE(r.tg_vanishing);
  EXPECT_TRUE(r.end0_acyclic);
  EXPECT_TRUE(r.e_required);
  EXPECT_EQ(r.chi_TX, 0);
}

TEST(Koszul, DimensionOfG24xG35) {
  EXPECT_EQ(rank(tangent_bundle()), 10);
  EXPECT_EQ(euler_characteristic(bundle_O(0, 0)), 1);
}
