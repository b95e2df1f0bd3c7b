#include "fano4/poly.hpp"

#include <numeric>
#include <sstream>

namespace fano {

bool GrLex::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
  MultiPoly r(nvars, c.field());
  r.add_term(Exponent(nvars, 0), c);
  return r;
}

MultiPoly MultiPoly::var(int nvars, int i, Field f) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e, Scalar::one(f));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Scalar& c) {
  MultiPoly r(static_cast<int>(e.size()), c.field());
  r.add_term(e, c);
  return r;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

Scalar MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  if (c.field() != field_) throw FieldMismatch("polynomial over " + field_.name() + " got " + c.field().name());
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_ != n_ || o.field_ != field_) throw FieldMismatch("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_, field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly r(n_, field_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

MultiPoly MultiPoly::mul_trunc(const MultiPoly& o, const std::function<bool(const Exponent&)>& keep) const {
  if (o.n_ != n_ || o.field_ != field_) throw FieldMismatch("polynomial ring mismatch");
  MultiPoly r(n_, field_);
  Exponent e(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
      if (keep && !keep(e)) continue;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const { return mul_trunc(o, nullptr); }

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (n_ != o.n_ || field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(n_, Scalar::one(field_));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(n_, field_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::derivative(int i) const {
  MultiPoly r(n_, field_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    r.add_term(f, c * Scalar::from_int(e[i], field_));
  }
  return r;
}

MultiPoly MultiPoly::promote(Field target) const {
  MultiPoly r(n_, target);
  for (const auto& [e, c] : terms_) r.add_term(e, fano::promote(c, target));
  return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& subs) const {
  if (static_cast<int>(subs.size()) != n_) throw std::invalid_argument("compose: wrong substitution count");
  int m = subs.empty() ? 0 : subs[0].nvars();
  MultiPoly r(m, field_);
  std::vector<std::vector<MultiPoly>> powers(n_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(m, c);
    for (int i = 0; i < n_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, Scalar::one(field_)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
      if (e[i]) t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("eval: wrong point dimension");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < n_; ++i)
      if (e[i]) t *= x[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      os << "*" << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace fano
