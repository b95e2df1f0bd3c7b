#include "fano4/intersection.hpp"

#include <random>
#include <sstream>

#include "fano4/matrix.hpp"

namespace fano {

ChowElement porteous_class(int k, int n, const KClass& source, const KClass& target, int r) {
  Ambient a = Ambient::grassmannian(k, n);
  const int e = static_cast<int>(source.rank()), f = static_cast<int>(target.rank());
  const int size = e - r, idx = f - r;
  MultiPoly c = chern(a, target - source);
  std::vector<MultiPoly> parts(a.dim() + 1 + idx + size);
  for (size_t d = 0; d < parts.size(); ++d) parts[d] = c.homogeneous_part(static_cast<int>(d));
  auto entry = [&](int i, int j) {
    int d = idx + j - i;
    return d < 0 ? MultiPoly(a.nvars(), Field::rationals()) : parts[d];
  };
  // determinant by Laplace expansion; sizes here are tiny
  std::function<MultiPoly(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) -> MultiPoly {
    if (cols.empty()) return MultiPoly::constant(a.nvars(), Scalar(Rational(1)));
    MultiPoly s(a.nvars(), Field::rationals());
    for (size_t t = 0; t < cols.size(); ++t) {
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + t);
      MultiPoly term = mul(a, entry(row, cols[t]), det(rest, row + 1));
      s += t % 2 ? -term : term;
    }
    return s;
  };
  std::vector<int> cols(size);
  for (int i = 0; i < size; ++i) cols[i] = i;
  return to_chow(k, n, det(cols, 0));
}

PorteousResult porteous_c4() {
  Ambient a = Ambient::grassmannian(3, 5);
  KClass src = lambda2(taut(a, 0));
  KClass tgt = trivial(a.nvars(), 4);
  PorteousResult r;
  r.cls = porteous_class(3, 5, src, tgt, 2);
  r.cls_transposed = transpose_labels(r.cls);
  ChowElement h4 = sigma(3, 5, {});
  for (int i = 0; i < 4; ++i) h4 = schubert_product(h4, sigma(3, 5, {1}));
  r.degree = integrate(schubert_product(r.cls, h4));
  r.rank1_codimension = static_cast<int>((src.rank() - 1) * (tgt.rank() - 1));
  return r;
}

X4Numbers x4_h_numbers() {
  Ambient a{{{2, 4}, {3, 5}}};
  KClass E = taut_dual(a, 0) * lambda2(taut_dual(a, 1));
  MultiPoly x4 = chern_part(a, E, 6);
  MultiPoly h1 = sigma1(a, 0), h2 = sigma1(a, 1);
  X4Numbers out;
  static const int binom[5] = {1, 4, 6, 4, 1};
  for (int i = 0; i < 5; ++i) {
    MultiPoly m = mul(a, h1.pow(4 - i), h2.pow(i));
    out.h[i] = integrate(a, mul(a, m, x4));
    out.k4_binomial += binom[i] * out.h[i];
  }
  KClass tx = tangent(a, 0) + tangent(a, 1) - E;
  MultiPoly mk = chern_part(a, tx, 1);
  out.k4 = integrate(a, mul(a, mk.pow(4), x4));
  out.chi_top = integrate(a, mul(a, chern_part(a, tx, 4), x4));

  // X8' = zeros of U^v (x) O(1) on G(2,4) x G(2,5)
  Ambient b{{{2, 4}, {2, 5}}};
  KClass e8 = taut_dual(b, 0) * lambda2(taut_dual(b, 1));
  MultiPoly k8 = chern_part(b, tangent(b, 0) + tangent(b, 1) - e8, 1);
  MultiPoly target = (sigma1(b, 0) + sigma1(b, 1)) * Scalar(Rational(3));
  out.x8p_index_three = k8 == target;
  std::ostringstream s;
  Exponent e1(b.nvars(), 0), e2(b.nvars(), 0);
  e1[0] = 1;
  e2[2] = 1;
  s << k8.coeff(e1).rational() << "*h1 + " << k8.coeff(e2).rational() << "*h2";
  out.x8p_minus_k = s.str();
  return out;
}

ChowElement chern_quotient_g25() {
  Ambient a = Ambient::grassmannian(2, 5);
  return to_chow(2, 5, chern(a, quotient(a, 0)));
}

Rational weak_fano_integral() {
  Ambient a = Ambient::grassmannian(2, 5);
  MultiPoly s2 = segre(a, quotient(a, 0)).homogeneous_part(2);
  return integrate(a, mul(a, s2, sigma1(a, 0).pow(4)));
}

Rational octic_integral() {
  Ambient a = Ambient::grassmannian(2, 5);
  // s(W ^ V5) = c(Q)^5 c(S^2 U) = c(S^2 U - 5 U)
  KClass u = taut(a, 0);
  MultiPoly s2 = chern_part(a, sym2(u) - scaled(u, 5), 2);
  return integrate(a, mul(a, s2, sigma1(a, 0).pow(4)));
}

bool whitney_holds(int trials, std::uint64_t seed, std::string* why) {
  Ambient a{{{2, 4}, {3, 5}}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-1, 1), mult(-2, 2), count(1, 3);
  auto random_class = [&] {
    KClass k{a.nvars(), {}};
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> r(a.nvars());
      for (int& x : r) x = coef(rng);
      k = k + KClass{a.nvars(), {{r, mult(rng)}}};
    }
    return k;
  };
  for (int t = 0; t < trials; ++t) {
    KClass x = random_class(), y = random_class();
    if ((x + y).rank() != x.rank() + y.rank()) {
      if (why) *why = "rank not additive";
      return false;
    }
    if (chern(a, x + y) != mul(a, chern(a, x), chern(a, y))) {
      if (why) *why = "c(a+b) != c(a)c(b) at trial " + std::to_string(t);
      return false;
    }
  }
  return true;
}

bool pairing_unimodular(int k, int n) {
  auto labels = partitions_in_box(k, n - k);
  const int m = static_cast<int>(labels.size());
  Matrix g(m, m, Field::rationals());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int deg = 0;
      for (int x : labels[i]) deg += x;
      for (int x : labels[j]) deg += x;
      if (deg != k * (n - k)) continue;
      g(i, j) = Scalar(integrate(schubert_product(sigma(k, n, labels[i]), sigma(k, n, labels[j]))));
    }
  Scalar d = g.det();
  return d.rational() == 1 || d.rational() == -1;
}

bool structure_constants_nonnegative(int k, int n) {
  auto labels = partitions_in_box(k, n - k);
  for (const auto& a : labels)
    for (const auto& b : labels)
      for (const auto& [lam, c] : schubert_product(sigma(k, n, a), sigma(k, n, b)).c)
        if (sgn(c) < 0 || c.get_den() != 1) return false;
  return true;
}

}  // namespace fano
