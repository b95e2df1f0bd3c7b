#include <gtest/gtest.h>

#include <random>

#include "fano4/matrix.hpp"
#include "fano4/models.hpp"
#include "fano4/modp.hpp"
#include "fano4/poly.hpp"
#include "fano4/scalar.hpp"

using namespace fano;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Cyclo12, ZetaHasOrderTwelve) {
  Cyclo12 z = Cyclo12::zeta(), p(1);
  for (int k = 1; k <= 12; ++k) {
    p = p * z;
    if (k < 12) EXPECT_FALSE(p == Cyclo12(1)) << k;
  }
  EXPECT_TRUE(p == Cyclo12(1));
}

TEST(Cyclo12, MinimalPolynomialAndInverse) {
  // Phi_12(z) = z^4 - z^2 + 1
  Cyclo12 z = Cyclo12::zeta();
  Cyclo12 z2 = z * z;
  EXPECT_TRUE((z2 * z2 - z2 + Cyclo12(1)).is_zero());
  Cyclo12 a(1, 2, -1, 3);
  EXPECT_TRUE(a * a.inverse() == Cyclo12(1));
  EXPECT_THROW(Cyclo12().inverse(), DivisionByZero);
}

TEST(Cyclo12, Units) {
  auto [i, j] = cyclotomic_units();
  Field K = Field::cyclo12();
  EXPECT_EQ(i * i, -Scalar::one(K));
  EXPECT_EQ(j * j * j, Scalar::one(K));
  EXPECT_NE(j, Scalar::one(K));
}

TEST(Fp, Arithmetic) {
  Fp a(3, 7), b(5, 7);
  EXPECT_EQ((a * b).v, 1u);
  EXPECT_EQ(a.inverse().v, 5u);
  EXPECT_EQ(Fp(-1, 7).v, 6u);
  EXPECT_EQ(a.pow(6).v, 1u);
}

TEST(Scalar, FieldMismatchThrows) {
  Scalar q(Rational(1)), f(Fp(1, 7));
  EXPECT_THROW(q + f, FieldMismatch);
}

TEST(Scalar, PromoteRespectsArithmetic) {
  Field F = Field::prime(11);
  Scalar a(Rational(2, 3)), b(Rational(-5, 7));
  EXPECT_EQ(promote(a * b, F), promote(a, F) * promote(b, F));
  EXPECT_EQ(promote(a + b, F), promote(a, F) + promote(b, F));
  EXPECT_THROW(promote(Scalar(Rational(1, 11)), F), BadReduction);
}

TEST(Scalar, ReduceCycloUsesRoot) {
  for (uint64_t p : {13ull, 37ull, 61ull}) {
    uint64_t z = primitive_12th_root(p);
    Scalar r = reduce_cyclo(Cyclo12::zeta(), p, z);
    EXPECT_EQ(r.pow(12), Scalar::one(Field::prime(p)));
    EXPECT_NE(r.pow(6), Scalar::one(Field::prime(p)));
    EXPECT_NE(r.pow(4), Scalar::one(Field::prime(p)));
  }
}

TEST(Primes, Basic) {
  EXPECT_TRUE(is_prime(7));
  EXPECT_TRUE(is_prime(37));
  EXPECT_FALSE(is_prime(15));
  EXPECT_FALSE(is_prime(1));
}

TEST(MultiPoly, ArithmeticAndEval) {
  Field Q = Field::rationals();
  MultiPoly x = MultiPoly::var(2, 0, Q), y = MultiPoly::var(2, 1, Q);
  MultiPoly f = (x + y).pow(3);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.coeff({2, 1}), Scalar(Rational(3)));
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.eval({Scalar(Rational(1)), Scalar(Rational(2))}), Scalar(Rational(27)));
  EXPECT_EQ(f.derivative(0), (x + y).pow(2) * Scalar(Rational(3)));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(MultiPoly, Compose) {
  Field Q = Field::rationals();
  MultiPoly x = MultiPoly::var(2, 0, Q), y = MultiPoly::var(2, 1, Q);
  MultiPoly f = x * x - y;
  MultiPoly g = f.compose({x + y, x * y});
  EXPECT_EQ(g, x * x + y * y + x * y);
}

TEST(Matrix, RankDetInverse) {
  Field Q = Field::rationals();
  Matrix m = Matrix::from_ints({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}, Q);
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.det(), Scalar(Rational(18)));
  EXPECT_EQ(m * m.inverse(), Matrix::identity(3, Q));
  Matrix s = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, Q);
  EXPECT_EQ(s.rank(), 2);
  EXPECT_TRUE(s.det().is_zero());
  auto k = s.kernel();
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(vec_is_zero(s * k[0]));
}

TEST(Matrix, RankDropsOnlyModP) {
  Field Q = Field::rationals();
  Matrix m = Matrix::from_ints({{1, 0}, {0, 7}}, Q);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.promote(Field::prime(7)).rank(), 1);
}

TEST(Matrix, Solve) {
  Field Q = Field::rationals();
  Matrix m = Matrix::from_ints({{1, 1}, {1, -1}}, Q);
  Vec x;
  ASSERT_TRUE(m.solve(vec_from_ints({3, 1}, Q), &x));
  EXPECT_EQ(x, vec_from_ints({2, 1}, Q));
  Matrix z = Matrix::from_ints({{1, 1}, {1, 1}}, Q);
  EXPECT_FALSE(z.solve(vec_from_ints({0, 1}, Q), &x));
}

TEST(Matrix, RandomDetMultiplicative) {
  std::mt19937_64 rng(11);
  for (Field f : {Field::rationals(), Field::cyclo12(), Field::prime(101)}) {
    Matrix a(4, 4, f), b(4, 4, f);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        a(i, j) = random_scalar(f, rng);
        b(i, j) = random_scalar(f, rng);
      }
    EXPECT_EQ((a * b).det(), a.det() * b.det()) << f.name();
  }
}

TEST(Spans, IntersectAndAnnihilate) {
  Field Q = Field::rationals();
  std::vector<Vec> a = {vec_from_ints({1, 0, 0}, Q), vec_from_ints({0, 1, 0}, Q)};
  std::vector<Vec> b = {vec_from_ints({0, 1, 0}, Q), vec_from_ints({0, 0, 1}, Q)};
  auto c = intersect_spans(a, b);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(proportional(c[0], vec_from_ints({0, 1, 0}, Q)));
  auto ann = annihilator(a, 3, Q);
  ASSERT_EQ(ann.size(), 1u);
  EXPECT_TRUE(proportional(ann[0], vec_from_ints({0, 0, 1}, Q)));
}

TEST(ModP, GaussianBinomialAndCells) {
  EXPECT_EQ(modp::gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(modp::gaussian_binomial(5, 3, 2), 155u);
  for (modp::u32 p : {2u, 3u, 7u}) {
    modp::Grassmannian g(2, 5, p);
    EXPECT_EQ(g.size(), modp::gaussian_binomial(5, 2, p));
  }
  EXPECT_EQ(modp::projective_count(4, 7), 400u);
}

TEST(ModP, RankAndKernel) {
  // rows (1 2 3), (2 4 6) over F_7
  std::vector<modp::u32> m = {1, 2, 3, 2, 4, 6};
  EXPECT_EQ(modp::rank(m, 2, 3, 7), 1);
  EXPECT_EQ(modp::kernel(m, 2, 3, 7).size(), 2u);
}

TEST(ModP, ParallelSumIndependentOfThreads) {
  auto block = [](modp::u64 b, modp::u64 e) {
    modp::u64 s = 0;
    for (modp::u64 i = b; i < e; ++i) s += i * i % 97;
    return s;
  };
  modp::u64 one = modp::parallel_sum(100000, 1, block);
  EXPECT_EQ(modp::parallel_sum(100000, 3, block), one);
  EXPECT_EQ(modp::parallel_sum(100000, 8, block), one);
}
