// Schubert calculus on Grassmannians and products of Grassmannians via
// Chern roots, and Chern/Segre classes of virtual bundles.
//
// On G(k, n) the variables x_1..x_k are the Chern roots of U^v, so that
// sigma_lambda = s_lambda(x) and classes with lambda_1 > n - k vanish.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fano4/poly.hpp"

namespace fano {

using Partition = std::vector<int>;

// A product of Grassmannians; variables are laid out factor by factor.
struct Ambient {
  std::vector<std::pair<int, int>> factors;  // (k, n)
  int nvars() const;
  int offset(int f) const;
  int dim() const;
  int factor_dim(int f) const;
  static Ambient grassmannian(int k, int n) { return Ambient{{{k, n}}}; }
  bool operator==(const Ambient& o) const { return factors == o.factors; }
};

// s_lambda in the variables of factor f, as a polynomial on the ambient.
MultiPoly schur_poly(const Ambient& a, int f, const Partition& lambda);
// Expansion of a polynomial symmetric in the variables of factor f (and
// independent of the others) in Schur polynomials.
std::map<Partition, Rational> schur_expand(const Ambient& a, int f, const MultiPoly& p);
// Top-degree coefficient: the integral over the ambient.
Rational integrate(const Ambient& a, const MultiPoly& p);
// Keeps monomials whose per-factor degree is at most the factor dimension.
MultiPoly truncate(const Ambient& a, const MultiPoly& p);
MultiPoly mul(const Ambient& a, const MultiPoly& p, const MultiPoly& q);
MultiPoly sigma1(const Ambient& a, int f);

struct ChowElement {
  int k = 0, n = 0;
  std::map<Partition, Rational> c;  // Schubert labels fitting in k x (n - k)
  std::string str() const;
  bool operator==(const ChowElement& o) const { return k == o.k && n == o.n && c == o.c; }
};
ChowElement sigma(int k, int n, const Partition& lambda);
ChowElement to_chow(int k, int n, const MultiPoly& p);
MultiPoly to_poly(const ChowElement& e);
ChowElement schubert_product(const ChowElement& a, const ChowElement& b);
ChowElement operator+(const ChowElement& a, const ChowElement& b);
ChowElement scaled(const ChowElement& a, const Rational& r);
Rational integrate(const ChowElement& e);
// Transposed labels, i.e. the same class read on G(n-k, n).
ChowElement transpose_labels(const ChowElement& e);
std::vector<Partition> partitions_in_box(int rows, int cols);
Partition complement(const Partition& p, int rows, int cols);

// Virtual bundle given by Chern roots: integer linear forms in the ambient
// variables with integer multiplicities.
struct KClass {
  int nvars = 0;
  std::map<std::vector<int>, long long> roots;
  long long rank() const;
};
KClass trivial(int nvars, long long r);
KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a, const KClass& b);
KClass operator*(const KClass& a, const KClass& b);  // tensor product
KClass dual(const KClass& a);
KClass scaled(const KClass& a, long long m);
KClass lambda2(const KClass& a);  // genuine bundles only
KClass sym2(const KClass& a);
// U^v, U, Q, TG on factor f
KClass taut_dual(const Ambient& a, int f);
KClass taut(const Ambient& a, int f);
KClass quotient(const Ambient& a, int f);
KClass tangent(const Ambient& a, int f);
// Total Chern class truncated to the ambient; segre = chern of the negative.
MultiPoly chern(const Ambient& a, const KClass& e);
MultiPoly segre(const Ambient& a, const KClass& e);
MultiPoly chern_part(const Ambient& a, const KClass& e, int degree);

}  // namespace fano
