#include "fano4/scalar.hpp"

#include <sstream>

namespace fano {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---- Cyclo12 ----

Cyclo12 Cyclo12::operator+(const Cyclo12& o) const {
  Cyclo12 r;
  for (int k = 0; k < 4; ++k) r.c[k] = c[k] + o.c[k];
  return r;
}

Cyclo12 Cyclo12::operator-(const Cyclo12& o) const {
  Cyclo12 r;
  for (int k = 0; k < 4; ++k) r.c[k] = c[k] - o.c[k];
  return r;
}

Cyclo12 Cyclo12::operator-() const {
  Cyclo12 r;
  for (int k = 0; k < 4; ++k) r.c[k] = -c[k];
  return r;
}

Cyclo12 Cyclo12::operator*(const Cyclo12& o) const {
  std::array<Rational, 7> d{};
  for (int a = 0; a < 4; ++a) {
    if (sgn(c[a]) == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (sgn(o.c[b]) == 0) continue;
      d[a + b] += c[a] * o.c[b];
    }
  }
  for (int k = 6; k >= 4; --k) {
    if (sgn(d[k]) == 0) continue;
    d[k - 2] += d[k];
    d[k - 4] -= d[k];
  }
  return Cyclo12(d[0], d[1], d[2], d[3]);
}

Cyclo12 Cyclo12::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta12)");
  // Columns of m are this * z^k; solve m x = e0.
  Rational m[4][5];
  Cyclo12 col = *this;
  for (int k = 0; k < 4; ++k) {
    for (int r = 0; r < 4; ++r) m[r][k] = col.c[r];
    col = col * Cyclo12::zeta();
  }
  for (int r = 0; r < 4; ++r) m[r][4] = (r == 0) ? 1 : 0;
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    while (sgn(m[piv][k]) == 0) ++piv;
    if (piv != k)
      for (int t = 0; t < 5; ++t) std::swap(m[piv][t], m[k][t]);
    Rational inv = 1 / m[k][k];
    for (int t = k; t < 5; ++t) m[k][t] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == k || sgn(m[r][k]) == 0) continue;
      Rational f = m[r][k];
      for (int t = k; t < 5; ++t) m[r][t] -= f * m[k][t];
    }
  }
  return Cyclo12(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyclo12 Cyclo12::conj() const {
  const Cyclo12 zinv(0, 1, 0, -1);  // z - z^3
  Cyclo12 r(c[0]);
  Cyclo12 pw(1);
  for (int k = 1; k < 4; ++k) {
    pw = pw * zinv;
    Cyclo12 t = pw;
    for (auto& x : t.c) x *= c[k];
    r = r + t;
  }
  return r;
}

std::string Cyclo12::str() const {
  std::ostringstream os;
  os << "(" << c[0].get_str() << "," << c[1].get_str() << "," << c[2].get_str() << "," << c[3].get_str() << ")";
  return os.str();
}

// ---- Fp ----

Fp::Fp(int64_t x, uint64_t prime) : p(prime) {
  int64_t r = x % static_cast<int64_t>(prime);
  if (r < 0) r += static_cast<int64_t>(prime);
  v = static_cast<uint64_t>(r);
}

Fp Fp::operator+(const Fp& o) const {
  uint64_t s = v + o.v;
  if (s >= p) s -= p;
  return raw(s, p);
}

Fp Fp::operator-(const Fp& o) const { return raw(v >= o.v ? v - o.v : v + p - o.v, p); }

Fp Fp::operator-() const { return raw(v == 0 ? 0 : p - v, p); }

Fp Fp::operator*(const Fp& o) const {
  return raw(static_cast<uint64_t>((static_cast<unsigned __int128>(v) * o.v) % p), p);
}

Fp Fp::pow(uint64_t e) const {
  Fp r = raw(1 % p, p), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Fp Fp::inverse() const {
  if (v == 0) throw DivisionByZero("inverse of zero mod p");
  return pow(p - 2);
}

// ---- Field ----

Field Field::prime(uint64_t p) {
  if (p >= (uint64_t(1) << 61) || !is_prime(p)) throw std::invalid_argument("not a prime below 2^61: " + std::to_string(p));
  return {FieldKind::Fp, p};
}

std::string Field::name() const {
  switch (kind) {
    case FieldKind::Q:
      return "Q";
    case FieldKind::Cyclo12:
      return "Q(zeta12)";
    case FieldKind::Fp:
      return "F_" + std::to_string(p);
  }
  return "?";
}

// ---- Scalar ----

Scalar Scalar::zero(Field f) { return from_int(0, f); }
Scalar Scalar::one(Field f) { return from_int(1, f); }

Scalar Scalar::from_int(long n, Field f) {
  switch (f.kind) {
    case FieldKind::Q:
      return Scalar(Rational(n));
    case FieldKind::Cyclo12:
      return Scalar(Cyclo12(Rational(n)));
    case FieldKind::Fp:
      return Scalar(Fp(n, f.p));
  }
  return Scalar();
}

Scalar Scalar::from_rational(const Rational& q, Field f) { return promote(Scalar(q), f); }

Field Scalar::field() const {
  switch (v_.index()) {
    case 0:
      return Field::rationals();
    case 1:
      return Field::cyclo12();
    default:
      return Field{FieldKind::Fp, std::get<Fp>(v_).p};
  }
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0:
      return sgn(std::get<Rational>(v_)) == 0;
    case 1:
      return std::get<Cyclo12>(v_).is_zero();
    default:
      return std::get<Fp>(v_).v == 0;
  }
}

bool Scalar::is_one() const { return *this == one(field()); }

const Rational& Scalar::rational() const {
  if (v_.index() != 0) throw FieldMismatch("scalar is not rational");
  return std::get<Rational>(v_);
}
const Cyclo12& Scalar::cyclo() const {
  if (v_.index() != 1) throw FieldMismatch("scalar is not in Q(zeta12)");
  return std::get<Cyclo12>(v_);
}
const Fp& Scalar::fp() const {
  if (v_.index() != 2) throw FieldMismatch("scalar is not in a prime field");
  return std::get<Fp>(v_);
}

void Scalar::check_same(const Scalar& o) const {
  if (field() != o.field()) throw FieldMismatch("mixed fields: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  switch (v_.index()) {
    case 0:
      return Scalar(Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_)));
    case 1:
      return Scalar(std::get<Cyclo12>(v_) + std::get<Cyclo12>(o.v_));
    default:
      return Scalar(std::get<Fp>(v_) + std::get<Fp>(o.v_));
  }
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  switch (v_.index()) {
    case 0:
      return Scalar(Rational(std::get<Rational>(v_) - std::get<Rational>(o.v_)));
    case 1:
      return Scalar(std::get<Cyclo12>(v_) - std::get<Cyclo12>(o.v_));
    default:
      return Scalar(std::get<Fp>(v_) - std::get<Fp>(o.v_));
  }
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0:
      return Scalar(Rational(-std::get<Rational>(v_)));
    case 1:
      return Scalar(-std::get<Cyclo12>(v_));
    default:
      return Scalar(-std::get<Fp>(v_));
  }
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (v_.index()) {
    case 0:
      return Scalar(Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_)));
    case 1:
      return Scalar(std::get<Cyclo12>(v_) * std::get<Cyclo12>(o.v_));
    default:
      return Scalar(std::get<Fp>(v_) * std::get<Fp>(o.v_));
  }
}

Scalar Scalar::inverse() const {
  switch (v_.index()) {
    case 0:
      if (is_zero()) throw DivisionByZero("inverse of zero rational");
      return Scalar(Rational(1 / std::get<Rational>(v_)));
    case 1:
      return Scalar(std::get<Cyclo12>(v_).inverse());
    default:
      return Scalar(std::get<Fp>(v_).inverse());
  }
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(field()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  switch (v_.index()) {
    case 0:
      return std::get<Rational>(v_) == std::get<Rational>(o.v_);
    case 1:
      return std::get<Cyclo12>(v_) == std::get<Cyclo12>(o.v_);
    default:
      return std::get<Fp>(v_) == std::get<Fp>(o.v_);
  }
}

std::string Scalar::str() const {
  switch (v_.index()) {
    case 0:
      return std::get<Rational>(v_).get_str();
    case 1:
      return std::get<Cyclo12>(v_).str();
    default:
      return std::to_string(std::get<Fp>(v_).v);
  }
}

// ---- promotion / reduction ----

static Fp reduce_rational(const Rational& q, uint64_t p) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pm(std::to_string(p));
  mpz_class dr = den % pm;
  if (sgn(dr) == 0) throw BadReduction("denominator of " + q.get_str() + " divisible by " + std::to_string(p));
  mpz_class nr = num % pm;
  if (sgn(nr) < 0) nr += pm;
  Fp n = Fp::raw(std::stoull(nr.get_str()), p);
  Fp d = Fp::raw(std::stoull(dr.get_str()), p);
  return n * d.inverse();
}

Scalar promote(const Scalar& x, Field target) {
  if (x.field() == target) return x;
  if (x.field().kind != FieldKind::Q) throw FieldMismatch("only rationals can be promoted, got " + x.field().name());
  switch (target.kind) {
    case FieldKind::Cyclo12:
      return Scalar(Cyclo12(x.rational()));
    case FieldKind::Fp:
      return Scalar(reduce_rational(x.rational(), target.p));
    case FieldKind::Q:
      break;
  }
  return x;
}

Scalar reduce_cyclo(const Cyclo12& z, uint64_t p, uint64_t zeta_image) {
  Fp zi = Fp::raw(zeta_image % p, p);
  Fp r = Fp::raw(0, p), pw = Fp::raw(1 % p, p);
  for (int k = 0; k < 4; ++k) {
    if (sgn(z.c[k]) != 0) r = r + reduce_rational(z.c[k], p) * pw;
    pw = pw * zi;
  }
  return Scalar(r);
}

CycloUnits cyclotomic_units() {
  Cyclo12 z = Cyclo12::zeta();
  Cyclo12 z3 = z * z * z;
  return {Scalar(z3), Scalar(z3 * z)};
}

uint64_t primitive_12th_root(uint64_t p) {
  if (!is_prime(p) || p % 12 != 1) throw BadReduction(std::to_string(p) + " does not split Q(zeta12)");
  for (uint64_t g = 2; g < p; ++g) {
    Fp r = Fp(static_cast<int64_t>(g), p).pow((p - 1) / 12);
    if (r.pow(4).v == 1 || r.pow(6).v == 1) continue;
    uint64_t best = r.v;
    for (uint64_t e : {5u, 7u, 11u}) best = std::min(best, r.pow(e).v);
    return best;
  }
  throw BadReduction("no primitive 12th root mod " + std::to_string(p));
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    Fp x = Fp::raw(a % n, n).pow(d);
    if (x.v == 1 || x.v == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = x * x;
      if (x.v == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

}  // namespace fano
