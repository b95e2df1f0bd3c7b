#include <algorithm>
#include <set>
#include <sstream>

#include "fano4/models.hpp"

namespace fano {

namespace {

Field K() { return Field::cyclo12(); }
Scalar R(long a, long b = 1) {
  Rational q(a, b);
  q.canonicalize();
  return Scalar::from_rational(q, K());
}

}  // namespace

ThetaTensor ozeki_theta() {
  Field f = K();
  auto F = [&](int i, int j) { return f_wedge(i, j, f); };
  return ThetaTensor(f, {F(2, 5) - F(3, 4), F(1, 5) - F(2, 4), F(2, 3) - F(1, 4), F(4, 5) - F(1, 2)});
}

OzekiTables ozeki_tables() {
  auto [i, j] = cyclotomic_units();
  Scalar j2 = j * j, z = R(0), o = R(1), two = R(2);
  OzekiTables t;
  t.p = {{z, o, z, i}, {z, o, z, -i}, {o, z, o, o}, {o, z, j, j2}, {o, z, j2, j}};
  t.omega = {wedge_forms({o, z, z, i, z}, {z, o, z, z, i}), wedge_forms({o, z, z, -i, z}, {z, o, z, z, -i}),
             wedge_forms({z, o, z, o, z}, {o, z, o, z, o}), wedge_forms({z, o, z, j2, z}, {o, z, j2, z, j}),
             wedge_forms({z, o, z, j, z}, {o, z, j, z, j2})};
  t.e[{1, 2}] = {z, z, o, z, z};
  t.e[{1, 3}] = {o, -i, -two, i, o};
  t.e[{1, 4}] = {-i, -j2, two * i * j, o, -i * j2};
  t.e[{1, 5}] = {-i, -j, two * i * j2, o, -i * j};
  t.e[{2, 3}] = {o, i, -two, -i, o};
  t.e[{2, 4}] = {i, -j2, -two * i * j, o, i * j2};
  t.e[{2, 5}] = {i, -j, -two * i * j2, o, i * j};
  t.e[{3, 4}] = {o, z, j2, z, j};
  t.e[{3, 5}] = {o, z, j, z, j2};
  t.e[{4, 5}] = {o, z, o, z, o};

  t.sign_lift = Matrix::identity(5, K());
  t.sign_lift(1, 1) = -o;
  t.sign_lift(3, 3) = -o;

  Scalar third = R(1, 3);
  std::vector<Vec> cols = {
      {j * third, -two * i * j, j * third, -i * j, R(4, 3) * j},
      {-two * i * third, -o, i * third, z, i * third},
      {R(4, 3) * j2, R(4) * i * j2, -two * j2 * third, R(-4) * i * j2, R(4, 3) * j2},
      {-i * j * third, z, -i * j * third, -j, two * i * j * third},
      {R(4, 3), i, third, two * i, third},
  };
  t.cycle_lift = Matrix::from_cols(cols, K());
  return t;
}

std::string to_string(FormAction a) {
  switch (a) {
    case FormAction::PushForward:
      return "g W g^T";
    case FormAction::PullBack:
      return "g^T W g";
    case FormAction::InversePushForward:
      return "g^-1 W g^-T";
    case FormAction::InversePullBack:
      return "g^-T W g^-1";
  }
  return "?";
}

Matrix act_on_form(const Matrix& g, const Matrix& w, FormAction a) {
  switch (a) {
    case FormAction::PushForward:
      return g * w * g.transpose();
    case FormAction::PullBack:
      return g.transpose() * w * g;
    case FormAction::InversePushForward: {
      Matrix gi = g.inverse();
      return gi * w * gi.transpose();
    }
    case FormAction::InversePullBack: {
      Matrix gi = g.inverse();
      return gi.transpose() * w * gi;
    }
  }
  return w;
}

std::vector<int> induced_permutation(const Matrix& g, const std::vector<Matrix>& omega, FormAction a) {
  std::vector<int> perm;
  for (const auto& w : omega) {
    Matrix img = act_on_form(g, w, a);
    int hit = 0;
    for (size_t m = 0; m < omega.size(); ++m)
      if (forms_proportional(img, omega[m])) hit = static_cast<int>(m) + 1;
    perm.push_back(hit);
  }
  return perm;
}

std::string cycle_string(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  for (int x : perm)
    if (x < 1 || x > n) return "not a permutation";
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  bool any = false;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || perm[s] == s + 1) continue;
    os << "(";
    int x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      os << (first ? "" : " ") << x + 1;
      first = false;
      x = perm[x] - 1;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

static Vec flatten(const Matrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

bool theta_transform(const ThetaTensor& t, const Matrix& g, FormAction a, Matrix* A) {
  std::vector<Vec> cols;
  for (const auto& c : t.comp) cols.push_back(flatten(c));
  Matrix M = Matrix::from_cols(cols, t.field);
  Matrix out(4, 4, t.field);
  for (int i = 0; i < 4; ++i) {
    Vec x;
    if (!M.solve(flatten(act_on_form(g, t.comp[i], a)), &x)) return false;
    for (int j = 0; j < 4; ++j) out(i, j) = x[j];
  }
  if (A) *A = out;
  return true;
}

static std::vector<Vec> row_space(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = m.rref(&piv);
  std::vector<Vec> out;
  for (size_t k = 0; k < piv.size(); ++k) out.push_back(r.row(static_cast<int>(k)));
  return out;
}

static bool in_span(const std::vector<Vec>& span, const Vec& x) {
  std::vector<Vec> all = span;
  all.push_back(x);
  return span_rank(all) == span_rank(span);
}

PijkReport pijk_configuration(const std::vector<Matrix>& omega) {
  PijkReport r;
  std::vector<std::vector<Vec>> pi;
  for (const auto& w : omega) pi.push_back(row_space(w));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k) {
        if (i == j || i == k) continue;
        std::vector<Vec> jk = pi[j - 1];
        jk.insert(jk.end(), pi[k - 1].begin(), pi[k - 1].end());
        auto x = intersect_spans(pi[i - 1], jk);
        if (x.size() != 1) {
          r.all_single_points = false;
          continue;
        }
        r.points[{i, j, k}] = normalize_projective(x[0]);
      }
  for (const auto& [key, x] : r.points) {
    auto [i, j, k] = key;
    std::vector<int> rest;
    for (int l = 1; l <= 5; ++l)
      if (l != i && l != j && l != k) rest.push_back(l);
    auto it = r.points.find({i, rest[0], rest[1]});
    if (it == r.points.end() || !proportional(it->second, x)) r.coincidence = false;
    bool fresh = true;
    for (const auto& d : r.distinct)
      if (proportional(d, x)) fresh = false;
    if (fresh) {
      r.distinct.push_back(x);
      r.distinct_label.push_back(i);
    }
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) r.hyperplanes.push_back({i, j});
  for (size_t n = 0; n < r.distinct.size(); ++n) {
    std::vector<bool> row, lrow;
    for (auto [i, j] : r.hyperplanes) {
      std::vector<Vec> h = pi[i - 1];
      h.insert(h.end(), pi[j - 1].begin(), pi[j - 1].end());
      bool inc = in_span(h, r.distinct[n]);
      bool lab = (r.distinct_label[n] == i || r.distinct_label[n] == j);
      row.push_back(inc);
      lrow.push_back(lab);
      if (lab && !inc) r.hyperplanes_contain_iab_jcd = false;
    }
    r.incidence.push_back(row);
    r.label_incidence.push_back(lrow);
  }
  return r;
}

CremonaPlanes cremona_planes(const std::map<PairIndex, Vec>& e) {
  auto E = [&](int a, int b) { return e.at({std::min(a, b), std::max(a, b)}); };
  CremonaPlanes c;
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) {
      std::vector<int> r;
      for (int x = 1; x <= 5; ++x)
        if (x != p && x != q) r.push_back(x);
      c.P_pq[{p, q}] = {E(r[0], r[1]), E(r[1], r[2]), E(r[0], r[2])};
    }
  for (int p = 1; p <= 5; ++p) {
    std::vector<Vec> span;
    for (int i = 1; i <= 5; ++i)
      if (i != p) span.push_back(E(i, p));
    c.P_p[p] = span;
    c.P_p_rank[p] = span_rank(span);
  }
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) c.P_p_meet_dim[{p, q}] = static_cast<int>(intersect_spans(c.P_p[p], c.P_p[q]).size());
  return c;
}

}  // namespace fano
