// Skew forms on V5, the tensor theta in V4^* (x) Lambda^2 V5^*, and its
// contractions.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano4/matrix.hpp"

namespace fano {

struct AmbiguousFiber : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotGeneric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f_i^v ^ f_j^v as a 5x5 alternating matrix (1-indexed).
Matrix f_wedge(int i, int j, Field f);
// a ^ b = a b^T - b a^T for covectors a, b.
Matrix wedge_forms(const Vec& a, const Vec& b);
bool is_alternating(const Matrix& m);
// x^T m y
Scalar form_eval(const Matrix& m, const Vec& x, const Vec& y);

// Optional presentation theta = sum_k u_k (x) omega_k with sum u_k = 0 and
// sum omega_k = 0.
struct FiveTerm {
  std::array<Vec, 5> u;
  std::array<Matrix, 5> omega;
};

struct ThetaTensor {
  Field field = Field::rationals();
  std::array<Matrix, 4> comp;
  std::optional<FiveTerm> five;

  ThetaTensor() = default;
  ThetaTensor(Field f, std::array<Matrix, 4> c);
  // theta(v) for a row of V4 coordinates.
  Matrix operator()(const Vec& v) const;
  bool operator==(const ThetaTensor& o) const { return field == o.field && comp == o.comp; }
};

Matrix contract(const ThetaTensor& t, const Vec& v);

// Contraction of w ^ w against f1 ^ ... ^ f5 -> 1; spans ker(w) when rank 4,
// zero iff rank <= 2.
Vec wedge_square(const Matrix& w);
int pfaffian_rank(const Matrix& w);

// Reduction of a rational or cyclotomic tensor modulo p; zeta_image is the
// chosen image of zeta_12 (ignored for rational input).
ThetaTensor reduce_theta(const ThetaTensor& t, uint64_t p, uint64_t zeta_image = 0);
Vec reduce_vec(const Vec& v, uint64_t p, uint64_t zeta_image = 0);
Scalar reduce_scalar(const Scalar& x, uint64_t p, uint64_t zeta_image = 0);

enum class PencilClass { O7, O6, O5, Deeper };
std::string to_string(PencilClass c);

// Binary forms (coefficients a_0 s^d + a_1 s^{d-1} t + ... ) and their gcd.
using BinaryForm = std::vector<Scalar>;
BinaryForm binary_gcd(const std::vector<BinaryForm>& forms, Field f);

// Quadrics in (s:t) given by wedge_square(s A + t B).
std::vector<BinaryForm> pencil_quadrics(const Matrix& a, const Matrix& b);
PencilClass classify_pencil(const ThetaTensor& t, const std::vector<Vec>& U);
std::vector<Vec> isotropic_3space(const ThetaTensor& t, const std::vector<Vec>& U);

enum class ModelId { X0, X1, X2, X3, X4, X6, X8, X8p };
std::string to_string(ModelId m);
// (dim A in V4, dim B in V5)
std::pair<int, int> model_dims(ModelId m);
bool model_member(ModelId m, const ThetaTensor& t, const std::vector<Vec>& A, const std::vector<Vec>& B);

}  // namespace fano
