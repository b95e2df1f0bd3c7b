#include "fano4/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fano {

int Ambient::nvars() const {
  int s = 0;
  for (auto [k, n] : factors) s += k;
  return s;
}

int Ambient::offset(int f) const {
  int s = 0;
  for (int i = 0; i < f; ++i) s += factors[i].first;
  return s;
}

int Ambient::factor_dim(int f) const { return factors[f].first * (factors[f].second - factors[f].first); }

int Ambient::dim() const {
  int s = 0;
  for (size_t f = 0; f < factors.size(); ++f) s += factor_dim(static_cast<int>(f));
  return s;
}

static Field QQ() { return Field::rationals(); }

MultiPoly schur_poly(const Ambient& a, int f, const Partition& lambda) {
  const int k = a.factors[f].first, off = a.offset(f), nv = a.nvars();
  MultiPoly out(nv, QQ());
  int len = 0;
  for (int x : lambda) len += x > 0;
  if (len > k) return out;
  std::vector<std::pair<int, int>> boxes;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
    for (int c = 0; c < lambda[r]; ++c) boxes.emplace_back(r, c);
  std::vector<std::vector<int>> T(lambda.size());
  for (size_t r = 0; r < lambda.size(); ++r) T[r].assign(lambda[r], 0);
  Exponent e(nv, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == boxes.size()) {
      out.add_term(e, Scalar(Rational(1)));
      return;
    }
    auto [r, c] = boxes[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
      T[r][c] = v;
      ++e[off + v - 1];
      rec(i + 1);
      --e[off + v - 1];
    }
  };
  rec(0);
  return out;
}

// sum over w in S_k of sgn(w) * coefficient of target - w(delta)
static Rational alternant_coeff(const MultiPoly& p, const Ambient& a, const std::vector<Exponent>& targets_per_factor) {
  const int nf = static_cast<int>(a.factors.size());
  std::vector<std::vector<std::pair<std::vector<int>, int>>> shifts(nf);
  for (int f = 0; f < nf; ++f) {
    const int k = a.factors[f].first;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
      std::vector<int> d(k);
      for (int i = 0; i < k; ++i) d[i] = k - 1 - perm[i];
      shifts[f].emplace_back(d, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  Rational total = 0;
  Exponent e(a.nvars(), 0);
  std::function<void(int, int)> rec = [&](int f, int sign) {
    if (f == nf) {
      Scalar c = p.coeff(e);
      if (!c.is_zero()) total += sign * c.rational();
      return;
    }
    const int off = a.offset(f), k = a.factors[f].first;
    for (const auto& [d, s] : shifts[f]) {
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        e[off + i] = targets_per_factor[f][i] - d[i];
        ok = ok && e[off + i] >= 0;
      }
      if (ok) rec(f + 1, sign * s);
    }
  };
  rec(0, 1);
  return total;
}

std::map<Partition, Rational> schur_expand(const Ambient& a, int f, const MultiPoly& p) {
  const int k = a.factors[f].first, off = a.offset(f);
  Ambient single{{a.factors[f]}};
  // restrict to the factor's variables
  MultiPoly q(k, QQ());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < a.nvars(); ++i)
      if ((i < off || i >= off + k) && e[i]) throw std::invalid_argument("schur_expand: polynomial involves other factors");
    q.add_term(Exponent(e.begin() + off, e.begin() + off + k), c);
  }
  std::map<Partition, Rational> out;
  int maxdeg = q.degree();
  for (int d = 0; d <= maxdeg; ++d) {
    for (const auto& lam : [&] {
           std::vector<Partition> ps;
           Partition cur;
           std::function<void(int, int)> rec = [&](int left, int mx) {
             if (static_cast<int>(cur.size()) > k) return;
             if (left == 0) {
               ps.push_back(cur);
               return;
             }
             for (int x = std::min(left, mx); x >= 1; --x) {
               cur.push_back(x);
               rec(left - x, x);
               cur.pop_back();
             }
           };
           rec(d, d);
           return ps;
         }()) {
      Exponent t(k, 0);
      for (int i = 0; i < k; ++i) t[i] = (i < static_cast<int>(lam.size()) ? lam[i] : 0) + (k - 1 - i);
      Rational c = alternant_coeff(q, single, {t});
      if (sgn(c) != 0) out[lam] = c;
    }
  }
  return out;
}

Rational integrate(const Ambient& a, const MultiPoly& p) {
  std::vector<Exponent> targets;
  for (auto [k, n] : a.factors) {
    Exponent t(k);
    for (int i = 0; i < k; ++i) t[i] = (n - k) + (k - 1 - i);
    targets.push_back(t);
  }
  return alternant_coeff(p, a, targets);
}

MultiPoly truncate(const Ambient& a, const MultiPoly& p) {
  MultiPoly out(p.nvars(), p.field());
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (size_t f = 0; f < a.factors.size() && keep; ++f) {
      int s = 0;
      for (int i = 0; i < a.factors[f].first; ++i) s += e[a.offset(static_cast<int>(f)) + i];
      keep = s <= a.factor_dim(static_cast<int>(f));
    }
    if (keep) out.add_term(e, c);
  }
  return out;
}

MultiPoly mul(const Ambient& a, const MultiPoly& p, const MultiPoly& q) {
  return p.mul_trunc(q, [&](const Exponent& e) {
    for (size_t f = 0; f < a.factors.size(); ++f) {
      int s = 0;
      for (int i = 0; i < a.factors[f].first; ++i) s += e[a.offset(static_cast<int>(f)) + i];
      if (s > a.factor_dim(static_cast<int>(f))) return false;
    }
    return true;
  });
}

MultiPoly sigma1(const Ambient& a, int f) { return schur_poly(a, f, {1}); }

std::string ChowElement::str() const {
  std::string s;
  for (const auto& [lam, c] : c) {
    if (sgn(c) == 0) continue;
    std::string label;
    if (!lam.empty()) label = "s";
    for (int x : lam) label += std::to_string(x);
    Rational a = abs(c);
    std::string coef = (a == 1 && !label.empty()) ? "" : a.get_str();
    if (s.empty())
      s = sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    s += coef + label;
  }
  return s.empty() ? "0" : s;
}

ChowElement sigma(int k, int n, const Partition& lambda) {
  ChowElement e{k, n, {}};
  Partition l;
  for (int x : lambda)
    if (x) l.push_back(x);
  if (static_cast<int>(l.size()) <= k && (l.empty() || l[0] <= n - k)) e.c[l] = 1;
  return e;
}

ChowElement to_chow(int k, int n, const MultiPoly& p) {
  ChowElement e{k, n, {}};
  for (const auto& [lam, c] : schur_expand(Ambient::grassmannian(k, n), 0, p))
    if (lam.empty() || lam[0] <= n - k) e.c[lam] = c;
  return e;
}

MultiPoly to_poly(const ChowElement& e) {
  Ambient a = Ambient::grassmannian(e.k, e.n);
  MultiPoly p(e.k, QQ());
  for (const auto& [lam, c] : e.c) p += schur_poly(a, 0, lam) * Scalar(c);
  return p;
}

ChowElement schubert_product(const ChowElement& a, const ChowElement& b) {
  if (a.k != b.k || a.n != b.n) throw std::invalid_argument("schubert_product: different ambients");
  Ambient amb = Ambient::grassmannian(a.k, a.n);
  return to_chow(a.k, a.n, mul(amb, to_poly(a), to_poly(b)));
}

ChowElement operator+(const ChowElement& a, const ChowElement& b) {
  if (a.k != b.k || a.n != b.n) throw std::invalid_argument("ChowElement sum: different ambients");
  ChowElement r = a;
  for (const auto& [l, c] : b.c) r.c[l] += c;
  for (auto it = r.c.begin(); it != r.c.end();) it = sgn(it->second) == 0 ? r.c.erase(it) : std::next(it);
  return r;
}

ChowElement scaled(const ChowElement& a, const Rational& r) {
  ChowElement out = a;
  for (auto& [l, c] : out.c) c *= r;
  return out;
}

Rational integrate(const ChowElement& e) {
  Partition box(e.k, e.n - e.k);
  auto it = e.c.find(box);
  return it == e.c.end() ? Rational(0) : it->second;
}

ChowElement transpose_labels(const ChowElement& e) {
  ChowElement t{e.n - e.k, e.n, {}};
  for (const auto& [lam, c] : e.c) {
    Partition conj;
    for (int i = 1; !lam.empty() && i <= lam[0]; ++i) {
      int m = 0;
      for (int x : lam) m += x >= i;
      conj.push_back(m);
    }
    t.c[conj] = c;
  }
  return t;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int mx) {
    Partition trimmed;
    for (int x : cur)
      if (x) trimmed.push_back(x);
    if (static_cast<int>(cur.size()) == rows) {
      out.push_back(trimmed);
      return;
    }
    for (int x = mx; x >= 0; --x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(cols);
  return out;
}

Partition complement(const Partition& p, int rows, int cols) {
  Partition c;
  for (int i = rows - 1; i >= 0; --i) {
    int x = cols - (i < static_cast<int>(p.size()) ? p[i] : 0);
    if (x) c.push_back(x);
  }
  return c;
}

}  // namespace fano
