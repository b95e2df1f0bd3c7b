#include <gtest/gtest.h>

#include <random>

#include "fano4/models.hpp"

using namespace fano;

TEST(Ozeki, RankTwoLocusMatchesTables) {
  ThetaTensor t = ozeki_theta();
  OzekiTables T = ozeki_tables();
  RankTwoLocus loc = rank2_locus(t, T.p);
  ASSERT_EQ(loc.points.size(), 5u);
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(forms_proportional(T.omega[k], t(T.p[k]))) << k;
  ASSERT_EQ(loc.e.size(), 10u);
  for (const auto& [pq, v] : T.e) EXPECT_TRUE(proportional(v, loc.e.at(pq)));
}

TEST(Ozeki, FiveTermPresentation) {
  ThetaTensor t = ozeki_theta();
  FiveTerm ft = five_term(t, rank2_locus(t, ozeki_tables().p));
  Matrix s(5, 5, t.field);
  for (const auto& w : ft.omega) s = s + w;
  EXPECT_TRUE(s.is_zero());
}

TEST(Ozeki, SignLiftIsTransposition) {
  OzekiTables T = ozeki_tables();
  auto perm = induced_permutation(T.sign_lift, T.omega, FormAction::PushForward);
  EXPECT_EQ(cycle_string(perm), "(1 2)");
}

TEST(Ozeki, CycleLiftIsAFiveCycle) {
  OzekiTables T = ozeki_tables();
  auto perm = induced_permutation(T.cycle_lift, T.omega, FormAction::PushForward);
  std::string c = cycle_string(perm);
  EXPECT_EQ(c.size(), std::string("(1 2 3 4 5)").size()) << c;
  Matrix A;
  EXPECT_TRUE(theta_transform(ozeki_theta(), T.cycle_lift, FormAction::PushForward, &A));
}

TEST(Ozeki, PijkPoints) {
  PijkReport r = pijk_configuration(ozeki_tables().omega);
  EXPECT_TRUE(r.all_single_points);
  EXPECT_TRUE(r.coincidence);
  EXPECT_EQ(r.distinct.size(), 15u);
  EXPECT_EQ(r.hyperplanes.size(), 10u);
}

TEST(Segre, CubicIsSingularAtTheTenPoints) {
  ThetaTensor t = ozeki_theta();
  RankTwoLocus loc = rank2_locus(t, ozeki_tables().p);
  SegreCubic c = segre_cubic(t, 7);
  EXPECT_EQ(c.corank, 1);
  EXPECT_EQ(c.f.degree(), 3);
  for (const auto& [pq, e] : loc.e) EXPECT_TRUE(singular_at(c.f, e));
  auto cp = cremona_planes(loc.e);
  for (const auto& [k, v] : cp.P_pq) EXPECT_TRUE(contains_linear_space(c.f, v));
}

TEST(Segre, CubicForS5Form) {
  S5Form s = s5_theta();
  SegreCubic c = segre_cubic(s.theta, 1);
  EXPECT_EQ(c.corank, 1);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 10; ++k)
    EXPECT_TRUE(c.f.eval(wedge_square(s.theta(random_vec(4, s.theta.field, rng)))).is_zero());
}

TEST(Igusa, DeterminantIsDualToCubic) {
  ThetaTensor t = ozeki_theta();
  IgusaForm ig = igusa_quartic(t);
  EXPECT_EQ(ig.det.degree(), 4);
  auto grad = gradient(segre_cubic(t, 3).f);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10; ++k) {
    Vec w = wedge_square(t(random_vec(4, t.field, rng)));
    Vec h;
    for (const auto& g : grad) h.push_back(g.eval(w));
    EXPECT_TRUE(ig.det.eval(h).is_zero());
  }
}

TEST(Igusa, PrintedMatrixDiffersBySign) {
  ThetaTensor t = ozeki_theta();
  IgusaForm ig = igusa_quartic(t);
  auto printed = printed_igusa_matrix(t.field);
  // flip h4
  std::vector<MultiPoly> subs;
  for (int i = 0; i < 5; ++i) subs.push_back(i == 3 ? -MultiPoly::var(5, i, t.field) : MultiPoly::var(5, i, t.field));
  EXPECT_TRUE(poly_proportional(det4(printed).compose(subs), ig.det));
}

TEST(S5, QuadricsAndLocus) {
  S5Form s = s5_theta();
  EXPECT_EQ(s.Q.size(), 5u);
  EXPECT_EQ(apolar_system().rank(), 5);
  RankTwoLocus loc = rank2_locus(s.theta, s5_rank2_candidates());
  EXPECT_EQ(loc.points.size(), 5u);
  EXPECT_EQ(rank2_points_mod_p(reduce_theta(s.theta, 11)).size(), 5u);
}

TEST(S5, LiteralReadingLosesSymmetry) {
  S5Form s = s5_theta();
  EXPECT_THROW(rank2_locus(s5_theta_literal(s), s5_rank2_candidates()), std::exception);
}

TEST(S5, PermutationActionIsAHomomorphism) {
  S5Form s = s5_theta();
  std::vector<int> a = {1, 0, 2, 3, 4}, b = {1, 2, 0, 3, 4}, ab(5);
  for (int i = 0; i < 5; ++i) ab[i] = a[b[i]];
  EXPECT_EQ(s.perm_action(ab), s.perm_action(a) * s.perm_action(b));
  EXPECT_EQ(sign_of(a), -1);
  EXPECT_EQ(sign_of(b), 1);
}

TEST(S5, QuadricBatterySpan) {
  S5Form s = s5_theta();
  EXPECT_EQ(c4_quadrics(s).span_dim, 4);
}

TEST(Hypersurfaces, Monomials) {
  EXPECT_EQ(monomials(5, 3).size(), 35u);
  EXPECT_EQ(monomials(10, 2).size(), 55u);
}
