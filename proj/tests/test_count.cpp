#include <gtest/gtest.h>

#include "fano4/count.hpp"
#include "fano4/models.hpp"

using namespace fano;

TEST(Grassmannian, BothRoutesAgree) {
  EXPECT_EQ(count_grassmannian(2, 4, 2), 35u);
  EXPECT_EQ(count_grassmannian(3, 5, 2), 155u);
  EXPECT_EQ(count_grassmannian(2, 5, 7), 140050u);
}

TEST(Polynomials, EvalAndString) {
  auto x4 = expected_polynomial(ModelId::X4);
  ASSERT_TRUE(x4);
  EXPECT_EQ(x4->eval(7), 5335);
  EXPECT_EQ(x4->eval(1), 31);
  EXPECT_FALSE(expected_polynomial(ModelId::X3));
}

TEST(Fit, RecoversPolynomial) {
  std::vector<u64> ps = {7, 11, 13, 17, 19}, vals;
  for (auto p : ps) vals.push_back(1 + 6 * p + 17 * p * p + 6 * p * p * p + p * p * p * p);
  auto c = fit_polynomial(ps, vals);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[2], 17);
}

class S5Counts : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ThetaTensor t = theta_mod_p(s5_theta().theta, 7);
    counts_ = new PrimeCounts(count_all(t, 1, true));
  }
  static void TearDownTestSuite() { delete counts_; }
  static PrimeCounts* counts_;
};
PrimeCounts* S5Counts::counts_ = nullptr;

TEST_F(S5Counts, MatchPolynomialsAtSeven) {
  for (auto m : {ModelId::X0, ModelId::X1, ModelId::X2, ModelId::X4, ModelId::X6, ModelId::X8, ModelId::X8p}) {
    auto r = make_result(m, 7, counts_->models.at(m));
    EXPECT_EQ(r.status, CountResult::Status::Match) << to_string(m) << " measured " << r.measured;
  }
}

TEST_F(S5Counts, Identities) {
  EXPECT_EQ(counts_->models.at(ModelId::X3) - counts_->C3, 70u);
  EXPECT_EQ(counts_->models.at(ModelId::X4) - counts_->C4, 560u);
  EXPECT_EQ(counts_->X2_fast, counts_->models.at(ModelId::X2));
  EXPECT_EQ(counts_->flags, 10u);
}

TEST(Counts, ThreadDeterminism) {
  RawTheta r = raw_theta(theta_mod_p(s5_theta().theta, 7));
  G35Sweep a = sweep_g35(r, 1), b = sweep_g35(r, 3);
  EXPECT_EQ(a.X4, b.X4);
  EXPECT_EQ(a.X6, b.X6);
  EXPECT_EQ(a.rank_histogram, b.rank_histogram);
}

TEST(Counts, DoubleSweepMatchesFibration) {
  RawTheta r = raw_theta(theta_mod_p(s5_theta().theta, 5));
  EXPECT_EQ(x4_double_sweep(r, 1), sweep_g35(r, 1).X4);
}

TEST(Counts, OzekiAtThirteen) {
  ThetaTensor t = theta_mod_p(ozeki_theta(), 13);
  P4Sweep s = sweep_p4(raw_theta(t), 1);
  EXPECT_EQ(s.X0, 10u);
  EXPECT_EQ(s.X3 - s.C3, 130u);
  EXPECT_EQ(dp5_flags(t).size(), 10u);
}

TEST(Probe, RejectsBadPrimes) {
  std::string why;
  EXPECT_TRUE(good_reduction_probe(s5_theta().theta, 7, &why)) << why;
  EXPECT_FALSE(good_reduction_probe(s5_theta().theta, 5, &why));
  EXPECT_FALSE(why.empty());
  EXPECT_THROW(theta_mod_p(ozeki_theta(), 11), std::exception);
}

TEST(Grothendieck, ConstantCoefficient) {
  std::vector<PrimeCounts> pcs;
  for (u64 p : {7, 11})
    pcs.push_back(count_all(theta_mod_p(s5_theta().theta, p), 1, true));
  GrothendieckAudit g = audit_grothendieck(pcs);
  EXPECT_TRUE(g.constant_c);
  EXPECT_EQ(g.c, 10);
  EXPECT_EQ(g.discrepancy_l3, -5);
}

TEST(Zeros, ProjectiveCount) {
  // x0 x1 - x2^2 is a conic: p + 1 points
  Field F = Field::prime(7);
  MultiPoly f = MultiPoly::var(3, 0, F) * MultiPoly::var(3, 1, F) - MultiPoly::var(3, 2, F).pow(2);
  EXPECT_EQ(count_projective_zeros(f, 1), 8u);
}
