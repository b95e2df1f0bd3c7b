#include "fano4/matrix.hpp"

#include <sstream>

namespace fano {

Matrix::Matrix(int rows, int cols, Field f)
    : r_(rows), c_(cols), f_(f), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, Field f) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Scalar::from_int(rows[i].at(j), f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, Field f) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].field() != f) throw FieldMismatch("matrix entry field mismatch");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, Field f) { return from_rows(cols, f).transpose(); }

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(r_);
  for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix size mismatch");
  Matrix m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix size mismatch");
  Matrix m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product size mismatch");
  if (f_ != o.f_) throw FieldMismatch("matrix product field mismatch");
  Matrix m(r_, o.c_, f_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x * s;
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("matrix-vector size mismatch");
  Vec out(r_, Scalar::zero(f_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_, f_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::promote(Field target) const {
  Matrix m(r_, c_, target);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = fano::promote(a_[k], target);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < c_ && row < r_; ++col) {
    int sel = -1;
    for (int i = row; i < r_; ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < c_; ++j) std::swap(m(sel, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (int j = col; j < c_; ++j) m(row, j) = m(row, j) * inv;
    for (int i = 0; i < r_; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (int j = col; j < c_; ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = piv;
  return m;
}

// Fraction-free elimination on an integer copy (rows scaled by denominators).
static std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).rational().get_den());
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j).rational();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return a;
}

static int bareiss(std::vector<std::vector<mpz_class>>& a, int rows, int cols, mpz_class* det_out, int* sign_out) {
  int rank = 0, sign = 1;
  mpz_class prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int i = rank; i < rows; ++i)
      if (sgn(a[i][col]) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank) {
      std::swap(a[sel], a[rank]);
      sign = -sign;
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  if (det_out) *det_out = prev;
  if (sign_out) *sign_out = sign;
  return rank;
}

int Matrix::rank() const {
  if (f_.kind == FieldKind::Q) {
    auto a = integer_rows(*this);
    return bareiss(a, r_, c_, nullptr, nullptr);
  }
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

Scalar Matrix::det() const {
  if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
  if (r_ == 0) return Scalar::one(f_);
  if (f_.kind == FieldKind::Q) {
    auto a = integer_rows(*this);
    mpz_class d;
    int sign;
    int rk = bareiss(a, r_, c_, &d, &sign);
    if (rk < r_) return Scalar::zero(f_);
    Rational scale = 1;
    for (int i = 0; i < r_; ++i) {
      mpz_class l = 1;
      for (int j = 0; j < c_; ++j) l = lcm(l, (*this)(i, j).rational().get_den());
      scale *= Rational(l);
    }
    Rational out(d * sign);
    out /= scale;
    return Scalar(out);
  }
  Matrix m = *this;
  Scalar d = Scalar::one(f_);
  for (int col = 0; col < c_; ++col) {
    int sel = -1;
    for (int i = col; i < r_; ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Scalar::zero(f_);
    if (sel != col) {
      for (int j = 0; j < c_; ++j) std::swap(m(sel, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (int i = col + 1; i < r_; ++i) {
      if (m(i, col).is_zero()) continue;
      Scalar f = m(i, col) * inv;
      for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(r_, 2 * c_, f_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, c_ + i) = Scalar::one(f_);
  }
  std::vector<int> piv;
  Matrix red = aug.rref(&piv);
  if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] >= c_) throw DivisionByZero("singular matrix");
  Matrix inv(r_, c_, f_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv(i, j) = red(i, c_ + j);
  return inv;
}

std::vector<Vec> Matrix::kernel() const {
  std::vector<int> piv;
  Matrix red = rref(&piv);
  std::vector<bool> is_piv(c_, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < c_; ++free) {
    if (is_piv[free]) continue;
    Vec v(c_, Scalar::zero(f_));
    v[free] = Scalar::one(f_);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -red(static_cast<int>(k), free);
    basis.push_back(normalize_projective(v));
  }
  return basis;
}

bool Matrix::solve(const Vec& b, Vec* x) const {
  Matrix aug(r_, c_ + 1, f_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, c_) = b.at(i);
  }
  std::vector<int> piv;
  Matrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == c_) return false;
  if (x) {
    *x = Vec(c_, Scalar::zero(f_));
    for (size_t k = 0; k < piv.size(); ++k) (*x)[piv[k]] = red(static_cast<int>(k), c_);
  }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Vec> kernel_basis(const Matrix& m) { return m.kernel(); }

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += b.at(i);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b.at(i);
  return r;
}

Vec vec_scale(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("dot: size mismatch");
  Scalar s = Scalar::zero(a[0].field());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_promote(const Vec& a, Field f) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(promote(x, f));
  return r;
}

Vec vec_from_ints(const std::vector<long>& v, Field f) {
  Vec r;
  for (long x : v) r.push_back(Scalar::from_int(x, f));
  return r;
}

Vec normalize_projective(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return vec_scale(a, x.inverse());
  return a;
}

bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  if (vec_is_zero(a) || vec_is_zero(b)) return vec_is_zero(a) && vec_is_zero(b);
  return normalize_projective(a) == normalize_projective(b);
}

int span_rank(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return Matrix::from_rows(vs, vs[0][0].field()).rank();
}

std::vector<Vec> annihilator(const std::vector<Vec>& vs, int dim, Field f) {
  if (vs.empty()) {
    std::vector<Vec> basis;
    for (int i = 0; i < dim; ++i) {
      Vec e(dim, Scalar::zero(f));
      e[i] = Scalar::one(f);
      basis.push_back(e);
    }
    return basis;
  }
  return Matrix::from_rows(vs, f).kernel();
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) return {};
  Field f = a[0][0].field();
  int n = static_cast<int>(a[0].size());
  // The annihilator of the intersection is the sum of annihilators.
  auto ann_a = annihilator(a, n, f);
  auto ann_b = annihilator(b, n, f);
  std::vector<Vec> all = ann_a;
  all.insert(all.end(), ann_b.begin(), ann_b.end());
  return annihilator(all, n, f);
}

}  // namespace fano
