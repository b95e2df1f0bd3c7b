#include <stdexcept>

#include "fano4/schubert.hpp"

namespace fano {

namespace {

void clean(KClass& a) {
  for (auto it = a.roots.begin(); it != a.roots.end();) it = it->second == 0 ? a.roots.erase(it) : std::next(it);
}

std::vector<std::vector<int>> expand_roots(const KClass& a) {
  std::vector<std::vector<int>> out;
  for (const auto& [r, m] : a.roots) {
    if (m < 0) throw std::invalid_argument("operation needs a genuine bundle");
    for (long long i = 0; i < m; ++i) out.push_back(r);
  }
  return out;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

MultiPoly linear(int nvars, const std::vector<int>& r) {
  MultiPoly p(nvars, Field::rationals());
  for (int i = 0; i < nvars; ++i)
    if (r[i]) {
      Exponent e(nvars, 0);
      e[i] = 1;
      p.add_term(e, Scalar(Rational(r[i])));
    }
  return p;
}

}  // namespace

long long KClass::rank() const {
  long long s = 0;
  for (const auto& [r, m] : roots) s += m;
  return s;
}

KClass trivial(int nvars, long long r) {
  KClass k{nvars, {}};
  if (r) k.roots[std::vector<int>(nvars, 0)] = r;
  return k;
}

KClass operator+(const KClass& a, const KClass& b) {
  KClass s = a;
  for (const auto& [r, m] : b.roots) s.roots[r] += m;
  clean(s);
  return s;
}

KClass operator-(const KClass& a, const KClass& b) { return a + scaled(b, -1); }

KClass operator*(const KClass& a, const KClass& b) {
  KClass s{a.nvars, {}};
  for (const auto& [r, m] : a.roots)
    for (const auto& [q, n] : b.roots) s.roots[add(r, q)] += m * n;
  clean(s);
  return s;
}

KClass dual(const KClass& a) {
  KClass d{a.nvars, {}};
  for (const auto& [r, m] : a.roots) {
    std::vector<int> neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    d.roots[neg] += m;
  }
  return d;
}

KClass scaled(const KClass& a, long long m) {
  KClass s = a;
  for (auto& [r, x] : s.roots) x *= m;
  clean(s);
  return s;
}

KClass lambda2(const KClass& a) {
  auto rs = expand_roots(a);
  KClass s{a.nvars, {}};
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j) s.roots[add(rs[i], rs[j])] += 1;
  return s;
}

KClass sym2(const KClass& a) {
  auto rs = expand_roots(a);
  KClass s{a.nvars, {}};
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i; j < rs.size(); ++j) s.roots[add(rs[i], rs[j])] += 1;
  return s;
}

KClass taut_dual(const Ambient& a, int f) {
  KClass k{a.nvars(), {}};
  for (int i = 0; i < a.factors[f].first; ++i) {
    std::vector<int> r(a.nvars(), 0);
    r[a.offset(f) + i] = 1;
    k.roots[r] += 1;
  }
  return k;
}

KClass taut(const Ambient& a, int f) { return dual(taut_dual(a, f)); }

KClass quotient(const Ambient& a, int f) { return trivial(a.nvars(), a.factors[f].second) - taut(a, f); }

KClass tangent(const Ambient& a, int f) { return taut_dual(a, f) * quotient(a, f); }

MultiPoly chern(const Ambient& a, const KClass& e) {
  const int nv = a.nvars(), D = a.dim();
  MultiPoly c = MultiPoly::constant(nv, Scalar(Rational(1)));
  for (const auto& [r, m] : e.roots) {
    bool zero = true;
    for (int x : r) zero = zero && x == 0;
    if (zero) continue;
    MultiPoly l = linear(nv, r);
    MultiPoly f = MultiPoly::constant(nv, Scalar(Rational(1)));
    if (m > 0) {
      f = f + l;
    } else {
      // (1 + l)^{-1} as a truncated geometric series
      MultiPoly term = f;
      for (int j = 1; j <= D; ++j) {
        term = truncate(a, term * -l);
        f += term;
      }
    }
    for (long long i = 0; i < (m > 0 ? m : -m); ++i) c = mul(a, c, f);
  }
  return c;
}

MultiPoly segre(const Ambient& a, const KClass& e) { return chern(a, scaled(e, -1)); }

MultiPoly chern_part(const Ambient& a, const KClass& e, int degree) { return chern(a, e).homogeneous_part(degree); }

}  // namespace fano
