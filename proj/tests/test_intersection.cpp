#include <gtest/gtest.h>

#include "fano4/intersection.hpp"
#include "fano4/ledger.hpp"
#include "fano4/schubert.hpp"

using namespace fano;

namespace {
Rational sigma1_power(int k, int n, const Partition& lambda) {
  ChowElement s = sigma(k, n, lambda);
  int left = k * (n - k);
  for (int x : lambda) left -= x;
  for (int i = 0; i < left; ++i) s = schubert_product(s, sigma(k, n, {1}));
  return integrate(s);
}
}  // namespace

TEST(Schubert, Pieri) {
  EXPECT_EQ(schubert_product(sigma(2, 4, {1}), sigma(2, 4, {1})).str(), "s11 + s2");
  EXPECT_EQ(schubert_product(sigma(2, 4, {2}), sigma(2, 4, {2})).str(), "s22");
  EXPECT_EQ(schubert_product(sigma(2, 4, {2}), sigma(2, 4, {1, 1})).str(), "0");
}

TEST(Schubert, Degrees) {
  EXPECT_EQ(sigma1_power(2, 4, {}), 2);
  EXPECT_EQ(sigma1_power(2, 5, {}), 5);
  EXPECT_EQ(sigma1_power(3, 5, {}), 5);
  EXPECT_EQ(sigma1_power(2, 6, {}), 14);
  EXPECT_EQ(sigma1_power(2, 5, {2}), 3);
  EXPECT_EQ(sigma1_power(2, 5, {1, 1}), 2);
}

TEST(Schubert, DualityAndTranspose) {
  EXPECT_TRUE(pairing_unimodular(2, 5));
  EXPECT_EQ(complement({2, 1}, 2, 3), (Partition{2, 1}));
  EXPECT_EQ(partitions_in_box(2, 3).size(), 10u);
  EXPECT_EQ(transpose_labels(sigma(3, 5, {2})).str(), "s11");
}

TEST(Chern, TautologicalClasses) {
  Ambient a = Ambient::grassmannian(2, 5);
  EXPECT_EQ(to_chow(2, 5, chern(a, taut(a, 0))).str(), "1 - s1 + s11");
  EXPECT_EQ(chern_quotient_g25().str(), "1 + s1 + s2 + s3");
  // c(U) c(Q) = 1
  EXPECT_EQ(to_chow(2, 5, mul(a, chern(a, taut(a, 0)), chern(a, quotient(a, 0)))).str(), "1");
}

TEST(Chern, TangentBundleEuler) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}) {
    Ambient a = Ambient::grassmannian(k, n);
    Rational chi = integrate(a, chern_part(a, tangent(a, 0), a.dim()));
    EXPECT_EQ(chi, partitions_in_box(k, n - k).size()) << k << "," << n;
  }
}

TEST(Chern, SegreInvertsChern) {
  Ambient a = Ambient::grassmannian(2, 5);
  KClass e = sym2(taut_dual(a, 0)) - quotient(a, 0);
  EXPECT_EQ(to_chow(2, 5, mul(a, chern(a, e), segre(a, e))).str(), "1");
}

TEST(Chern, Whitney) {
  std::string why;
  EXPECT_TRUE(whitney_holds(10, 99, &why)) << why;
}

TEST(Porteous, C4) {
  PorteousResult r = porteous_c4();
  EXPECT_EQ(r.cls_transposed.str(), "3s11 + 2s2");
  EXPECT_EQ(r.degree, 12);
  EXPECT_EQ(r.rank1_codimension, 6);
}

TEST(Integrals, OnG25) {
  EXPECT_EQ(weak_fano_integral(), 2);
  EXPECT_EQ(octic_integral(), 8);
}

TEST(X4, HNumbers) {
  X4Numbers x = x4_h_numbers();
  std::array<Rational, 5> want = {2, 6, 13, 14, 12};
  EXPECT_EQ(x.h, want);
  EXPECT_EQ(x.k4, 172);
  EXPECT_EQ(x.k4_binomial, 172);
  EXPECT_EQ(x.chi_top, 31);
  EXPECT_EQ(x.x8p_minus_k, "3*h1 + 3*h2");
}

TEST(Ledger, Dp5Ring) {
  Dp5Class h = Dp5Class::hyperplane(), l = Dp5Class::line(0);
  EXPECT_EQ((h * h).pt, 1);
  EXPECT_EQ((l * l).pt, -1);
  EXPECT_EQ((h * l).pt, 0);
  Dp5Class x = Dp5Class::one() + h + l;
  EXPECT_EQ(x * x.inverse(), Dp5Class::one());
}

TEST(Ledger, SegreReadings) {
  auto r = segre_readings();
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].alpha, 2);
  EXPECT_EQ(r[1].alpha, 5);
  EXPECT_EQ(r[2].alpha, 3);
}

TEST(Ledger, RecomputedTableIsConsistent) {
  LedgerAudit a = blowup_ledger_audit({2, 6, 13, 14, 12});
  EXPECT_EQ(a.alpha, 3);
  EXPECT_TRUE(a.self_consistent());
  EXPECT_EQ(a.f4_sum, 60);
  EXPECT_EQ(a.f4_sum_printed, -40);
  EXPECT_EQ(a.recomputed.h_numbers(), a.h_expected);
}

TEST(Ledger, PrintedTableFailsTheHNumbers) {
  DivisorTable p = printed_table();
  EXPECT_TRUE(p.s5_invariant());
  EXPECT_NE(p.h_numbers()[4], 12);
}

TEST(SquareMap, BothTables) {
  for (const DivisorTable& t : {printed_table(), blowup_ledger_audit({2, 6, 13, 14, 12}).recomputed}) {
    SquareMapReport r = k3_and_square_map(t);
    EXPECT_EQ(r.gram_rank, 17);
    EXPECT_EQ(r.kernel_type, "U4");
    EXPECT_EQ(r.pic_type, "2U1+U4");
  }
}
