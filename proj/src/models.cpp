#include <algorithm>

#include "fano4/modp.hpp"
#include "fano4/models.hpp"

namespace fano {

Scalar random_scalar(Field f, std::mt19937_64& rng, int lim) {
  if (f.kind == FieldKind::Fp) {
    std::uniform_int_distribution<uint64_t> d(0, f.p - 1);
    return Scalar(Fp::raw(d(rng), f.p));
  }
  std::uniform_int_distribution<int> d(-lim, lim);
  return Scalar::from_int(d(rng), f);
}

Vec random_vec(int n, Field f, std::mt19937_64& rng, int lim) {
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(random_scalar(f, rng, lim));
  return v;
}

std::vector<Vec> random_plane(Field f, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Vec> U{random_vec(4, f, rng), random_vec(4, f, rng)};
    if (span_rank(U) == 2) return U;
  }
}

Matrix normalize_form(const Matrix& w) {
  for (int i = 0; i < w.rows(); ++i)
    for (int j = i + 1; j < w.cols(); ++j)
      if (!w(i, j).is_zero()) return w * w(i, j).inverse();
  return w;
}

bool forms_proportional(const Matrix& a, const Matrix& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return normalize_form(a) == normalize_form(b);
}

std::vector<Vec> rank2_points_mod_p(const ThetaTensor& t) {
  if (t.field.kind != FieldKind::Fp) throw FieldMismatch("rank2_points_mod_p needs a prime field");
  Field f = t.field;
  auto p = static_cast<modp::u32>(f.p);
  modp::Grassmannian P3(1, 4, p);
  std::vector<Vec> out;
  std::vector<modp::u32> buf(4);
  for (modp::u64 idx = 0; idx < P3.size(); ++idx) {
    P3.decode(idx, buf.data());
    Vec v;
    for (auto x : buf) v.push_back(Scalar(Fp::raw(x, p)));
    if (vec_is_zero(wedge_square(t(v)))) out.push_back(v);
  }
  return out;
}

RankTwoLocus rank2_locus(const ThetaTensor& t, std::vector<Vec> candidates) {
  if (candidates.empty()) {
    if (t.field.kind != FieldKind::Fp) throw std::invalid_argument("rank2_locus: candidates are required over " + t.field.name());
    candidates = rank2_points_mod_p(t);
  }
  RankTwoLocus loc;
  loc.field = t.field;
  for (const auto& v : candidates) {
    Matrix w = t(v);
    if (w.is_zero()) throw NotGeneric("theta vanishes at a point of P(V4)");
    if (!vec_is_zero(wedge_square(w))) throw NotGeneric("candidate point has rank 4");
    loc.points.push_back(normalize_projective(v));
    loc.omega.push_back(normalize_form(w));
  }
  if (loc.points.size() != 5) throw NotGeneric("rank-two locus has " + std::to_string(loc.points.size()) + " points");
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<Vec> four;
    for (int k = 0; k < 5; ++k)
      if (k != skip) four.push_back(loc.points[k]);
    if (span_rank(four) != 4) throw NotGeneric("rank-two points are not in general position");
  }
  for (const auto& w : loc.omega) {
    auto ker = w.kernel();
    if (ker.size() != 3) throw NotGeneric("rank-two form with unexpected kernel");
    loc.planes.push_back(ker);
  }
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) {
      auto x = intersect_spans(loc.planes[p - 1], loc.planes[q - 1]);
      if (x.size() != 1) throw NotGeneric("planes P_p and P_q do not meet in a point");
      loc.e[{p, q}] = normalize_projective(x[0]);
    }
  for (auto a = loc.e.begin(); a != loc.e.end(); ++a)
    for (auto b = std::next(a); b != loc.e.end(); ++b)
      if (proportional(a->second, b->second)) throw NotGeneric("two points e_pq coincide");
  return loc;
}

static Vec flat(const Matrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

FiveTerm five_term(const ThetaTensor& t, const RankTwoLocus& loc) {
  Field f = t.field;
  std::vector<Vec> cols;
  for (const auto& w : loc.omega) cols.push_back(flat(w));
  auto ker = Matrix::from_cols(cols, f).kernel();
  if (ker.size() != 1) throw Inconsistent("the five rank-two forms do not satisfy a unique relation");
  FiveTerm ft;
  for (int k = 0; k < 5; ++k) {
    if (ker[0][k].is_zero()) throw Inconsistent("relation among the omega_k has a zero coefficient");
    ft.omega[k] = loc.omega[k] * ker[0][k];
    ft.u[k] = Vec(4, Scalar::zero(f));
  }
  // theta_i = sum_k x_k omega_k with sum_k x_k = 0
  std::vector<Vec> sys;
  for (int k = 0; k < 5; ++k) {
    Vec c = flat(ft.omega[k]);
    c.push_back(Scalar::one(f));
    sys.push_back(c);
  }
  Matrix M = Matrix::from_cols(sys, f);
  for (int i = 0; i < 4; ++i) {
    Vec rhs = flat(t.comp[i]);
    rhs.push_back(Scalar::zero(f));
    Vec x;
    if (!M.solve(rhs, &x)) throw Inconsistent("theta is not in the span of the omega_k");
    for (int k = 0; k < 5; ++k) ft.u[k][i] = x[k];
  }
  return ft;
}

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, degree);
  return out;
}

static Scalar monomial_value(const Exponent& e, const Vec& x) {
  Scalar r = Scalar::one(x[0].field());
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i]) r *= x[i].pow(e[i]);
  return r;
}

SegreCubic segre_cubic(const ThetaTensor& t, uint64_t seed, int nsamples) {
  if (nsamples < 56) throw std::invalid_argument("segre_cubic: at least 56 samples are required");
  auto mons = monomials(5, 3);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Vec> rows;
    for (int s = 0; s < nsamples; ++s) {
      Vec w = wedge_square(t(random_vec(4, t.field, rng)));
      Vec row;
      for (const auto& m : mons) row.push_back(monomial_value(m, w));
      rows.push_back(row);
    }
    auto ker = Matrix::from_rows(rows, t.field).kernel();
    if (ker.size() != 1) continue;
    SegreCubic c;
    c.f = MultiPoly(5, t.field);
    for (size_t k = 0; k < mons.size(); ++k) c.f.add_term(mons[k], ker[0][k]);
    c.samples = nsamples;
    c.corank = 1;
    return c;
  }
  throw DegenerateSample("cubic interpolation did not have corank one");
}

std::vector<MultiPoly> gradient(const MultiPoly& f) {
  std::vector<MultiPoly> g;
  for (int i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

bool singular_at(const MultiPoly& f, const Vec& x) {
  if (!f.eval(x).is_zero()) return false;
  for (const auto& g : gradient(f))
    if (!g.eval(x).is_zero()) return false;
  return true;
}

bool contains_linear_space(const MultiPoly& f, const std::vector<Vec>& basis) {
  int k = static_cast<int>(basis.size());
  std::vector<MultiPoly> subs;
  for (int m = 0; m < f.nvars(); ++m) {
    MultiPoly s(k, f.field());
    for (int j = 0; j < k; ++j) s += MultiPoly::var(k, j, f.field()) * basis[j][m];
    subs.push_back(s);
  }
  return f.compose(subs).is_zero();
}

static MultiPoly linear_in_h(const Vec& w) {
  Field f = w[0].field();
  MultiPoly L(5, f);
  for (int m = 0; m < 5; ++m) L += MultiPoly::var(5, m, f) * w[m];
  return L;
}

MultiPoly det4(const std::vector<std::vector<MultiPoly>>& m) {
  std::vector<int> perm{0, 1, 2, 3};
  MultiPoly acc(m[0][0].nvars(), m[0][0].field());
  do {
    MultiPoly term = MultiPoly::constant(acc.nvars(), Scalar::from_int(sign_of(perm), acc.field()));
    for (int r = 0; r < 4; ++r) term = term * m[r][perm[r]];
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

IgusaForm igusa_quartic(const ThetaTensor& t) {
  Field f = t.field;
  auto e = [&](int a) {
    Vec v(4, Scalar::zero(f));
    v[a] = Scalar::one(f);
    return v;
  };
  auto Q = [&](const Vec& v) { return linear_in_h(wedge_square(t(v))); };
  Scalar half = Scalar::from_int(2, f).inverse();
  IgusaForm g;
  g.gram.assign(4, std::vector<MultiPoly>(4, MultiPoly(5, f)));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g.gram[a][b] = (Q(vec_add(e(a), e(b))) - Q(e(a)) - Q(e(b))) * half;
  g.det = det4(g.gram);
  return g;
}

std::vector<std::vector<MultiPoly>> printed_igusa_matrix(Field f) {
  auto h = [&](int i, long c) { return MultiPoly::var(5, i - 1, f) * Scalar::from_int(c, f); };
  MultiPoly z(5, f);
  return {{h(1, 2), h(2, -1), h(3, -1), h(5, -1)},
          {h(2, -1), h(3, 2), h(4, -1), z},
          {h(3, -1), h(4, -1), h(5, 2), h(1, -1)},
          {h(5, -1), z, h(1, -1), h(3, 2)}};
}

MultiPoly printed_igusa_quartic(Field f) {
  auto h = [&](int i) { return MultiPoly::var(5, i - 1, f); };
  auto c = [&](long x) { return MultiPoly::constant(5, Scalar::from_int(x, f)); };
  MultiPoly h1 = h(1), h2 = h(2), h3 = h(3), h4 = h(4), h5 = h(5);
  MultiPoly a = h1 * h2 - h4 * h5;
  return c(4) * h3.pow(4) + c(4) * h3 * h3 * (c(3) * h1 * h5 - h2 * h4) -
         c(4) * h3 * (h1.pow(3) + h5.pow(3) + h1 * h4 * h4 + h2 * h2 * h5) + a * a;
}

bool poly_proportional(const MultiPoly& a, const MultiPoly& b, Scalar* c) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto& [e, cb] = *b.terms().begin();
  Scalar ca = a.coeff(e);
  if (ca.is_zero()) return false;
  Scalar r = ca / cb;
  if (!(b * r == a)) return false;
  if (c) *c = r;
  return true;
}

}  // namespace fano
