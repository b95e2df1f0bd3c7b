// Dense exact matrices over a single field.
#pragma once

#include <string>
#include <vector>

#include "fano4/scalar.hpp"

namespace fano {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Field f);

  static Matrix identity(int n, Field f);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, Field f);
  static Matrix from_rows(const std::vector<Vec>& rows, Field f);
  static Matrix from_cols(const std::vector<Vec>& cols, Field f);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Field field() const { return f_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix promote(Field target) const;
  bool is_zero() const;

  // Reduced row echelon form; pivots receives pivot columns.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  Scalar det() const;
  Matrix inverse() const;
  // Right kernel basis; each vector has its first nonzero entry equal to 1.
  std::vector<Vec> kernel() const;
  // Solves this * x = b; returns false if inconsistent.
  bool solve(const Vec& b, Vec* x) const;

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  Field f_ = Field::rationals();
  std::vector<Scalar> a_;
};

std::vector<Vec> kernel_basis(const Matrix& m);

// Helpers on vectors.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& s);
Scalar dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);
Vec vec_promote(const Vec& a, Field f);
Vec vec_from_ints(const std::vector<long>& v, Field f);
// Scale so that the first nonzero entry is 1.
Vec normalize_projective(const Vec& a);
bool proportional(const Vec& a, const Vec& b);
// Rank of a list of vectors (as rows).
int span_rank(const std::vector<Vec>& vs);
// Basis of the intersection of two subspaces given by spanning sets.
std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b);
// Basis of the orthogonal complement {x : <v, x> = 0 for all v}.
std::vector<Vec> annihilator(const std::vector<Vec>& vs, int dim, Field f);

}  // namespace fano
