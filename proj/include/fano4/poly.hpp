// Sparse multivariate polynomials over one exact field.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fano4/scalar.hpp"

namespace fano {

using Exponent = std::vector<int>;

// Graded lexicographic: higher total degree first, then lex.
struct GrLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrLex>;

  MultiPoly() = default;
  MultiPoly(int nvars, Field f) : n_(nvars), field_(f) {}

  static MultiPoly constant(int nvars, const Scalar& c);
  static MultiPoly var(int nvars, int i, Field f);
  static MultiPoly monomial(const Exponent& e, const Scalar& c);

  int nvars() const { return n_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  Scalar coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int e) const;
  // Product keeping only monomials accepted by keep().
  MultiPoly mul_trunc(const MultiPoly& o, const std::function<bool(const Exponent&)>& keep) const;
  MultiPoly homogeneous_part(int d) const;
  MultiPoly derivative(int i) const;
  MultiPoly promote(Field target) const;
  // Substitute polynomials (all in the same ring) for the variables.
  MultiPoly compose(const std::vector<MultiPoly>& subs) const;

  Scalar eval(const std::vector<Scalar>& x) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int n_ = 0;
  Field field_ = Field::rationals();
  Terms terms_;
};

}  // namespace fano
