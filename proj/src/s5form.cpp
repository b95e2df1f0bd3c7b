#include <algorithm>

#include "fano4/models.hpp"

namespace fano {

int pair_index(int a, int b) {
  if (a == b) throw std::invalid_argument("pair_index: equal indices");
  if (a > b) std::swap(a, b);
  static const int base[5] = {0, 4, 7, 9, 10};
  return base[a] + (b - a - 1);
}

Vec pair_quadric(int i, int j, int k, int l) {
  Field f = Field::rationals();
  Vec v(10, Scalar::zero(f));
  int L[2] = {i - 1, j - 1}, M[2] = {k - 1, l - 1};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      int sign = (s == t) ? 1 : -1;
      v[pair_index(L[s], M[t])] += Scalar::from_int(sign, f);
    }
  return v;
}

Matrix apolar_system() {
  Matrix A(5, 10, Field::rationals());
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      A(a, pair_index(a, b)) = Scalar::from_int(1, Field::rationals());
      A(b, pair_index(a, b)) = Scalar::from_int(1, Field::rationals());
    }
  return A;
}

Vec S5Form::coords(const Vec& quadric) const {
  Vec x;
  if (!basis.solve(quadric, &x)) throw std::invalid_argument("quadric is not apolar");
  return x;
}

Matrix S5Form::perm_action(const std::vector<int>& sigma) const {
  Field f = Field::rationals();
  std::vector<Vec> cols;
  for (int c = 0; c < 5; ++c) {
    Vec moved(10, Scalar::zero(f));
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) moved[pair_index(sigma[a], sigma[b])] += basis(pair_index(a, b), c);
    cols.push_back(coords(moved));
  }
  return Matrix::from_cols(cols, f);
}

int sign_of(const std::vector<int>& sigma) {
  int s = 1;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) s = -s;
  return s;
}

S5Form s5_theta() {
  Field f = Field::rationals();
  S5Form s;
  auto ker = apolar_system().kernel();
  if (ker.size() != 5) throw std::logic_error("apolar quadrics do not form a 5-dimensional space");
  s.basis = Matrix::from_cols(ker, f);
  s.metric = s.basis.transpose() * s.basis;
  auto q = [&](int i, int j, int k, int l) { return s.coords(pair_quadric(i, j, k, l)); };
  s.Q = {wedge_forms(q(2, 3, 4, 5), q(2, 4, 3, 5)), wedge_forms(q(1, 3, 4, 5), q(1, 4, 5, 3)),
         wedge_forms(q(1, 2, 4, 5), q(1, 4, 2, 5)), wedge_forms(q(1, 2, 3, 5), q(1, 3, 5, 2)),
         wedge_forms(q(1, 2, 3, 4), q(1, 3, 2, 4))};
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      std::vector<int> r;
      for (int x = 1; x <= 5; ++x)
        if (x != i && x != j) r.push_back(x);
      Matrix acc(5, 5, f);
      for (int c = 0; c < 3; ++c) {
        int a = r[c], b = r[(c + 1) % 3], d = r[(c + 2) % 3];
        acc = acc + wedge_forms(q(i, a, b, d), q(j, a, b, d));
      }
      s.Qij[{i, j}] = acc;
    }
  std::array<Matrix, 4> comp;
  for (int k = 0; k < 4; ++k) comp[k] = s.Q[k] - s.Q[4];
  s.theta = ThetaTensor(f, comp);
  return s;
}

ThetaTensor s5_theta_literal(const S5Form& s) {
  std::array<Matrix, 4> comp;
  for (int k = 0; k < 4; ++k) comp[k] = s.Q[k] - s.Q[0];
  return ThetaTensor(Field::rationals(), comp);
}

std::vector<Vec> s5_rank2_candidates() {
  Field f = Field::rationals();
  return {vec_from_ints({4, -1, -1, -1}, f), vec_from_ints({-1, 4, -1, -1}, f), vec_from_ints({-1, -1, 4, -1}, f),
          vec_from_ints({-1, -1, -1, 4}, f), vec_from_ints({-1, -1, -1, -1}, f)};
}

MultiPoly pairing_form(const Matrix& M, const Matrix& G) {
  Field f = M.field();
  Matrix GMG = G * M * G;
  MultiPoly L(10, f);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      Exponent e(10, 0);
      e[pair_index(a, b)] = 1;
      L.add_term(e, GMG(a, b));
    }
  return L;
}

static Vec quadric_coeffs(const MultiPoly& q) {
  auto mons = monomials(10, 2);
  Vec v;
  for (const auto& m : mons) v.push_back(q.coeff(m));
  return v;
}

QuadricBattery c4_quadrics(const S5Form& s) {
  QuadricBattery b;
  std::vector<Vec> rows;
  for (int i = 1; i <= 5; ++i) {
    MultiPoly acc(10, Field::rationals());
    for (int j = 1; j <= 5; ++j) {
      if (j == i) continue;
      acc += pairing_form(s.Qij.at({i, j}), s.metric) * pairing_form(s.Q[j - 1], s.metric);
    }
    b.CQ.push_back(acc);
    rows.push_back(quadric_coeffs(acc));
  }
  b.span_dim = span_rank(rows);
  return b;
}

Vec c4_point(const std::vector<Vec>& V) {
  Field f = V.at(0)[0].field();
  auto perp = Matrix::from_rows(V, f).kernel();
  if (perp.size() != 2) throw std::invalid_argument("c4_point: a 3-space of V5 is required");
  Matrix N = wedge_forms(perp[0], perp[1]);
  Vec out(10, Scalar::zero(f));
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) out[pair_index(a, b)] = N(a, b);
  return out;
}

}  // namespace fano
