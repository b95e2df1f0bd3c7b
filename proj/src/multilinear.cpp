#include "fano4/multilinear.hpp"

namespace fano {

Matrix f_wedge(int i, int j, Field f) {
  Matrix m(5, 5, f);
  m(i - 1, j - 1) = Scalar::one(f);
  m(j - 1, i - 1) = -Scalar::one(f);
  return m;
}

Matrix wedge_forms(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("wedge_forms: size mismatch");
  int n = static_cast<int>(a.size());
  Field f = a[0].field();
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a[i] * b[j] - b[i] * a[j];
  return m;
}

bool is_alternating(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

Scalar form_eval(const Matrix& m, const Vec& x, const Vec& y) { return dot(x, m * y); }

ThetaTensor::ThetaTensor(Field f, std::array<Matrix, 4> c) : field(f), comp(std::move(c)) {
  for (const auto& m : comp) {
    if (m.rows() != 5 || m.cols() != 5) throw std::invalid_argument("theta components must be 5x5");
    if (m.field() != f) throw FieldMismatch("theta component field mismatch");
    if (!is_alternating(m)) throw std::invalid_argument("theta component is not alternating");
  }
}

Matrix ThetaTensor::operator()(const Vec& v) const { return contract(*this, v); }

Matrix contract(const ThetaTensor& t, const Vec& v) {
  if (v.size() != 4) throw std::invalid_argument("contract: V4 vector expected");
  Matrix m(5, 5, t.field);
  for (int k = 0; k < 4; ++k) {
    if (v[k].field() != t.field) throw FieldMismatch("contract: vector field mismatch");
    if (!v[k].is_zero()) m = m + t.comp[k] * v[k];
  }
  return m;
}

Vec wedge_square(const Matrix& w) {
  Field f = w.field();
  Vec out(5, Scalar::zero(f));
  Scalar two = Scalar::from_int(2, f);
  for (int m = 0; m < 5; ++m) {
    int idx[4], n = 0;
    for (int x = 0; x < 5; ++x)
      if (x != m) idx[n++] = x;
    auto e = [&](int a, int b) { return w(idx[a], idx[b]); };
    Scalar pf = e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
    out[m] = (m % 2 == 0 ? two : -two) * pf;
  }
  return out;
}

int pfaffian_rank(const Matrix& w) {
  if (!is_alternating(w)) throw std::invalid_argument("pfaffian_rank: form is not alternating");
  int r = w.rank();
  if (r % 2) throw std::logic_error("odd rank for an alternating form");
  return r;
}

Scalar reduce_scalar(const Scalar& x, uint64_t p, uint64_t zeta_image) {
  switch (x.field().kind) {
    case FieldKind::Q:
      return promote(x, Field::prime(p));
    case FieldKind::Cyclo12:
      if (zeta_image == 0) throw BadReduction("cyclotomic reduction needs an image of zeta");
      return reduce_cyclo(x.cyclo(), p, zeta_image);
    case FieldKind::Fp:
      if (x.field().p != p) throw FieldMismatch("cannot reduce between prime fields");
      return x;
  }
  return x;
}

Vec reduce_vec(const Vec& v, uint64_t p, uint64_t zeta_image) {
  Vec r;
  for (const auto& x : v) r.push_back(reduce_scalar(x, p, zeta_image));
  return r;
}

ThetaTensor reduce_theta(const ThetaTensor& t, uint64_t p, uint64_t zeta_image) {
  Field fp = Field::prime(p);
  std::array<Matrix, 4> c;
  for (int k = 0; k < 4; ++k) {
    c[k] = Matrix(5, 5, fp);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) c[k](i, j) = reduce_scalar(t.comp[k](i, j), p, zeta_image);
  }
  ThetaTensor r(fp, c);
  if (t.five) {
    FiveTerm ft;
    for (int k = 0; k < 5; ++k) {
      ft.u[k] = reduce_vec(t.five->u[k], p, zeta_image);
      ft.omega[k] = Matrix(5, 5, fp);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) ft.omega[k](i, j) = reduce_scalar(t.five->omega[k](i, j), p, zeta_image);
    }
    r.five = ft;
  }
  return r;
}

std::string to_string(PencilClass c) {
  switch (c) {
    case PencilClass::O7:
      return "O7_constant_rank";
    case PencilClass::O6:
      return "O6_one_rank2";
    case PencilClass::O5:
      return "O5_two_rank2";
    case PencilClass::Deeper:
      return "Deeper";
  }
  return "?";
}

// Univariate helpers: coefficient vectors, highest degree first, trimmed.
namespace {

using Uni = std::vector<Scalar>;

Uni trim(Uni a) {
  size_t k = 0;
  while (k < a.size() && a[k].is_zero()) ++k;
  return Uni(a.begin() + static_cast<long>(k), a.end());
}

Uni uni_mod(Uni a, const Uni& b) {
  a = trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Scalar f = a[0] / b[0];
    for (size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a = trim(a);
  }
  return a;
}

Uni uni_gcd(Uni a, Uni b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Uni r = uni_mod(a, b);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    Scalar inv = a[0].inverse();
    for (auto& x : a) x *= inv;
  }
  return a;
}

}  // namespace

BinaryForm binary_gcd(const std::vector<BinaryForm>& forms, Field f) {
  // t^m times the homogenized gcd of the dehomogenized (t = 1) forms.
  int m = -1;
  Uni g;
  bool any = false;
  for (const auto& F : forms) {
    size_t lead = 0;
    while (lead < F.size() && F[lead].is_zero()) ++lead;
    if (lead == F.size()) continue;
    int val = static_cast<int>(lead);
    m = any ? std::min(m, val) : val;
    g = any ? uni_gcd(g, F) : uni_gcd(F, Uni{});
    any = true;
  }
  if (!any) return {};  // all zero: the gcd is undefined (everything divides)
  // with s-powers highest first, a factor t^m shows up as m leading zeros
  BinaryForm out(static_cast<size_t>(m), Scalar::zero(f));
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::vector<BinaryForm> pencil_quadrics(const Matrix& a, const Matrix& b) {
  Vec wa = wedge_square(a), wb = wedge_square(b), wab = wedge_square(a + b);
  std::vector<BinaryForm> out;
  for (int m = 0; m < 5; ++m) out.push_back({wa[m], wab[m] - wa[m] - wb[m], wb[m]});
  return out;
}

static void check_plane(const std::vector<Vec>& U, size_t dim, const char* what) {
  if (U.size() != 2 || span_rank(U) != 2 || U[0].size() != dim) throw std::invalid_argument(std::string(what) + ": a 2-plane is required");
}

PencilClass classify_pencil(const ThetaTensor& t, const std::vector<Vec>& U) {
  check_plane(U, 4, "classify_pencil");
  auto qs = pencil_quadrics(t(U[0]), t(U[1]));
  BinaryForm g = binary_gcd(qs, t.field);
  if (g.empty()) return PencilClass::Deeper;
  int deg = static_cast<int>(g.size()) - 1;
  if (deg == 0) return PencilClass::O7;
  if (deg == 1) return PencilClass::O6;
  if (deg > 2) return PencilClass::Deeper;
  // degree 2: two distinct geometric roots iff the discriminant is nonzero
  Scalar disc = g[1] * g[1] - Scalar::from_int(4, t.field) * g[0] * g[2];
  return disc.is_zero() ? PencilClass::Deeper : PencilClass::O5;
}

std::vector<Vec> isotropic_3space(const ThetaTensor& t, const std::vector<Vec>& U) {
  PencilClass c = classify_pencil(t, U);
  if (c != PencilClass::O7) throw AmbiguousFiber("pencil is " + to_string(c) + "; the fiber is positive dimensional");
  Matrix a = t(U[0]), b = t(U[1]);
  Vec wa = wedge_square(a), wb = wedge_square(b);
  Vec wab = vec_sub(vec_sub(wedge_square(a + b), wa), wb);
  std::vector<int> piv;
  Matrix r = Matrix::from_rows({wa, wb, wab}, t.field).rref(&piv);
  if (piv.size() != 3) throw std::logic_error("isotropic_3space: image of S^2 U is not 3-dimensional");
  std::vector<Vec> out{r.row(0), r.row(1), r.row(2)};
  for (const auto& x : out)
    for (const auto& y : out)
      if (!form_eval(a, x, y).is_zero() || !form_eval(b, x, y).is_zero())
        throw std::logic_error("isotropic_3space: span is not isotropic");
  return out;
}

std::string to_string(ModelId m) {
  switch (m) {
    case ModelId::X0:
      return "X0";
    case ModelId::X1:
      return "X1";
    case ModelId::X2:
      return "X2";
    case ModelId::X3:
      return "X3";
    case ModelId::X4:
      return "X4";
    case ModelId::X6:
      return "X6";
    case ModelId::X8:
      return "X8";
    case ModelId::X8p:
      return "X8'";
  }
  return "?";
}

std::pair<int, int> model_dims(ModelId m) {
  switch (m) {
    case ModelId::X0:
      return {2, 1};
    case ModelId::X1:
      return {1, 4};
    case ModelId::X2:
      return {4, 2};
    case ModelId::X3:
      return {1, 1};
    case ModelId::X4:
      return {2, 3};
    case ModelId::X6:
      return {1, 3};
    case ModelId::X8:
      return {1, 2};
    case ModelId::X8p:
      return {2, 2};
  }
  return {0, 0};
}

bool model_member(ModelId m, const ThetaTensor& t, const std::vector<Vec>& A, const std::vector<Vec>& B) {
  auto [da, db] = model_dims(m);
  if (static_cast<int>(A.size()) != da || static_cast<int>(B.size()) != db || span_rank(A) != da || span_rank(B) != db)
    throw std::invalid_argument("model_member: wrong subspace dimensions for " + to_string(m));
  bool family_ii = (m == ModelId::X0 || m == ModelId::X3);
  for (const auto& a : A) {
    Matrix w = t(a);
    for (const auto& b : B) {
      if (family_ii) {
        if (!vec_is_zero(w * b)) return false;
      } else {
        for (const auto& c : B)
          if (!form_eval(w, b, c).is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace fano
