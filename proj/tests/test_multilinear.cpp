#include <gtest/gtest.h>

#include <random>

#include "fano4/models.hpp"
#include "fano4/multilinear.hpp"
#include "fano4/tensor_io.hpp"

using namespace fano;

namespace {
const Field Q = Field::rationals();
}

TEST(Forms, WedgeIsAlternating) {
  Matrix w = wedge_forms(vec_from_ints({1, 2, 0, 0, 1}, Q), vec_from_ints({0, 1, 1, 0, 0}, Q));
  EXPECT_TRUE(is_alternating(w));
  EXPECT_EQ(pfaffian_rank(w), 2);
  EXPECT_TRUE(vec_is_zero(wedge_square(w)));
  EXPECT_EQ(f_wedge(1, 2, Q)(0, 1), Scalar(Rational(1)));
  EXPECT_EQ(f_wedge(1, 2, Q)(1, 0), Scalar(Rational(-1)));
}

TEST(Forms, WedgeSquareSpansKernel) {
  Matrix w = f_wedge(1, 2, Q) + f_wedge(3, 4, Q);
  EXPECT_EQ(pfaffian_rank(w), 4);
  Vec k = wedge_square(w);
  EXPECT_FALSE(vec_is_zero(k));
  EXPECT_TRUE(vec_is_zero(w * k));
  EXPECT_TRUE(proportional(k, vec_from_ints({0, 0, 0, 0, 1}, Q)));
}

TEST(Forms, ZeroForm) {
  Matrix z(5, 5, Q);
  EXPECT_EQ(pfaffian_rank(z), 0);
}

TEST(Theta, ContractionIsLinear) {
  ThetaTensor t = ozeki_theta();
  std::mt19937_64 rng(3);
  Vec a = random_vec(4, t.field, rng), b = random_vec(4, t.field, rng);
  EXPECT_EQ(t(vec_add(a, b)), t(a) + t(b));
  EXPECT_EQ(contract(t, a), t(a));
}

TEST(Theta, ReductionModP) {
  ThetaTensor t = ozeki_theta();
  EXPECT_THROW(reduce_theta(t, 7, 0), std::exception);  // no 12th root of unity mod 7
  uint64_t z = primitive_12th_root(13);
  ThetaTensor r = reduce_theta(t, 13, z);
  EXPECT_EQ(r.field, Field::prime(13));
  for (const auto& m : r.comp) EXPECT_TRUE(is_alternating(m));
}

TEST(Pencil, GeneralPencilIsOpenOrbit) {
  S5Form s = s5_theta();
  std::mt19937_64 rng(4);
  int o7 = 0;
  for (int k = 0; k < 10; ++k) o7 += classify_pencil(s.theta, random_plane(Q, rng)) == PencilClass::O7;
  EXPECT_GE(o7, 8);
}

TEST(Pencil, ThroughRankTwoPointIsNotGeneral) {
  S5Form s = s5_theta();
  auto cands = s5_rank2_candidates();
  std::vector<Vec> U = {cands[0], vec_from_ints({1, 2, 3, 5}, Q)};
  EXPECT_NE(classify_pencil(s.theta, U), PencilClass::O7);
}

TEST(Pencil, IsotropicThreeSpaceIsIsotropic) {
  S5Form s = s5_theta();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    auto U = random_plane(Q, rng);
    if (classify_pencil(s.theta, U) != PencilClass::O7) continue;
    auto V = isotropic_3space(s.theta, U);
    ASSERT_EQ(V.size(), 3u);
    for (const auto& u : U)
      for (const auto& a : V)
        for (const auto& b : V) EXPECT_TRUE(form_eval(s.theta(u), a, b).is_zero());
  }
}

TEST(Pencil, BinaryGcd) {
  Field F = Q;
  auto c = [&](std::vector<long> v) { return BinaryForm(vec_from_ints(v, F)); };
  // s^2 - t^2 and s^2 + s t share s + t
  BinaryForm g = binary_gcd({c({1, 0, -1}), c({1, 1, 0})}, F);
  EXPECT_EQ(g.size(), 2u);
}

TEST(Models, DimensionsAndMembership) {
  EXPECT_EQ(model_dims(ModelId::X4), std::make_pair(2, 3));
  EXPECT_EQ(to_string(ModelId::X8p), "X8'");
  S5Form s = s5_theta();
  Vec v = vec_from_ints({1, 0, 0, 0}, Q);
  EXPECT_TRUE(model_member(ModelId::X3, s.theta, {v}, {wedge_square(s.theta(v))}));
  EXPECT_THROW(model_member(ModelId::X4, s.theta, {v}, {}), std::invalid_argument);
}

TEST(TensorIO, RoundTrip) {
  for (const ThetaTensor& t : {s5_theta().theta, ozeki_theta()}) {
    ThetaTensor back = parse_theta(format_theta(t));
    EXPECT_EQ(back, t);
  }
}

TEST(TensorIO, RejectsBadInput) {
  EXPECT_THROW(parse_theta("not json"), TensorFileError);
  EXPECT_THROW(parse_theta(R"({"field": "Q", "theta": [[["0"]]]})"), TensorFileError);
  EXPECT_THROW(parse_theta(R"({"field": "R", "theta": []})"), TensorFileError);
  // symmetric instead of alternating
  std::string row = R"(["0","1","0","0","0"],["1","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"])";
  std::string m = "[" + row + "]";
  EXPECT_THROW(parse_theta(R"({"field": "Q", "theta": [)" + m + "," + m + "," + m + "," + m + "]}"), TensorFileError);
  EXPECT_THROW(read_theta_file("/nonexistent/theta.json"), TensorFileError);
}
