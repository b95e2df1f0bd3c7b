// Exact scalars: rationals, the cyclotomic field Q(zeta_12), prime fields.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace fano {

using Rational = mpq_class;

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
struct BadReduction : std::domain_error {
  using std::domain_error::domain_error;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// a0 + a1 z + a2 z^2 + a3 z^3 with z^4 = z^2 - 1.
class Cyclo12 {
 public:
  std::array<Rational, 4> c{};

  Cyclo12() = default;
  explicit Cyclo12(const Rational& a) { c[0] = a; }
  Cyclo12(Rational a0, Rational a1, Rational a2, Rational a3) : c{a0, a1, a2, a3} {}

  static Cyclo12 zeta() { return Cyclo12(0, 1, 0, 0); }

  bool is_zero() const { return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0; }
  bool is_rational() const { return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0; }

  Cyclo12 operator+(const Cyclo12& o) const;
  Cyclo12 operator-(const Cyclo12& o) const;
  Cyclo12 operator-() const;
  Cyclo12 operator*(const Cyclo12& o) const;
  Cyclo12 inverse() const;
  bool operator==(const Cyclo12& o) const { return c == o.c; }

  // complex conjugation: z -> z^11 = z^-1
  Cyclo12 conj() const;
  std::string str() const;
};

// Residue modulo a prime p < 2^61.
class Fp {
 public:
  uint64_t v = 0;
  uint64_t p = 0;

  Fp() = default;
  Fp(int64_t x, uint64_t prime);
  static Fp raw(uint64_t v, uint64_t p) {
    Fp r;
    r.v = v;
    r.p = p;
    return r;
  }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator-() const;
  Fp operator*(const Fp& o) const;
  Fp inverse() const;
  Fp pow(uint64_t e) const;
  bool operator==(const Fp& o) const { return p == o.p && v == o.v; }
};

enum class FieldKind { Q, Cyclo12, Fp };

struct Field {
  FieldKind kind = FieldKind::Q;
  uint64_t p = 0;

  static Field rationals() { return {FieldKind::Q, 0}; }
  static Field cyclo12() { return {FieldKind::Cyclo12, 0}; }
  static Field prime(uint64_t p);
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string name() const;
};

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) {}
  Scalar(const Cyclo12& z) : v_(z) {}
  Scalar(const Fp& x) : v_(x) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(long n, Field f);
  static Scalar from_rational(const Rational& q, Field f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;
  const Cyclo12& cyclo() const;
  const Fp& fp() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<Rational, Cyclo12, Fp> v_;
  void check_same(const Scalar& o) const;
};

// Explicit ring map out of Q (or into a prime field from Q(zeta_12) given a
// chosen image of zeta).
Scalar promote(const Scalar& x, Field target);
Scalar reduce_cyclo(const Cyclo12& z, uint64_t p, uint64_t zeta_image);

// i = zeta^3, j = zeta^4.
struct CycloUnits {
  Scalar i;
  Scalar j;
};
CycloUnits cyclotomic_units();

// A primitive 12th root of unity mod p (p = 1 mod 12); the smallest one.
uint64_t primitive_12th_root(uint64_t p);

bool is_prime(uint64_t n);

}  // namespace fano
