#include "fano4/bott.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fano4/characters.hpp"
#include "fano4/scalar.hpp"

namespace fano {

static std::string join(const std::vector<int>& v, size_t from, size_t to) {
  std::string s;
  for (size_t i = from; i < to; ++i) s += (i > from ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string GrassWeight::str() const { return "(" + join(w, 0, k) + "|" + join(w, k, n) + ")"; }

std::string ProductWeight::str() const { return a.str() + "x" + b.str(); }

long long weyl_dimension(const std::vector<int>& l) {
  Rational d(1);
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = i + 1; j < l.size(); ++j)
    {
      Rational f(l[i] - l[j] + static_cast<long>(j - i), static_cast<long>(j - i));
      f.canonicalize();
      d *= f;
    }
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num().get_si();
}

BottResult bott(const GrassWeight& gw) {
  const int n = gw.n;
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = gw.w[i] + (n - i);
  BottResult r;
  auto s = l;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return r;
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inv += l[i] < l[j];
  std::sort(l.rbegin(), l.rend());
  r.zero = false;
  r.degree = inv;
  r.dominant.resize(n);
  for (int i = 0; i < n; ++i) r.dominant[i] = l[i] - (n - i);
  r.dim = weyl_dimension(r.dominant);
  return r;
}

GrassWeight dual(const GrassWeight& gw) {
  GrassWeight d = gw;
  for (int i = 0; i < gw.k; ++i) d.w[i] = -gw.w[gw.k - 1 - i];
  for (int i = gw.k; i < gw.n; ++i) d.w[i] = -gw.w[gw.n - 1 - (i - gw.k)];
  return d;
}

GrassWeight canonical_weight(int k, int n) {
  GrassWeight g{k, n, std::vector<int>(n, 0)};
  for (int i = 0; i < k; ++i) g.w[i] = -n;
  return g;
}

namespace {

using Poly = std::map<std::vector<int>, long long>;

// s_lambda(x_1..x_m) for a partition by semistandard tableaux.
Poly schur(const std::vector<int>& lambda) {
  const int m = static_cast<int>(lambda.size());
  std::vector<std::pair<int, int>> boxes;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < lambda[r]; ++c) boxes.emplace_back(r, c);
  std::vector<std::vector<int>> T(m);
  for (int r = 0; r < m; ++r) T[r].assign(lambda[r], 0);
  Poly out;
  std::vector<int> e(m, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == boxes.size()) {
      ++out[e];
      return;
    }
    auto [r, c] = boxes[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      T[r][c] = v;
      ++e[v - 1];
      rec(i + 1);
      --e[v - 1];
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::map<std::vector<int>, long long> gl_tensor(const std::vector<int>& a, const std::vector<int>& b) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("gl_tensor: rank mismatch");
  if (m == 0) return {{{}, 1}};
  const int sa = a.back(), sb = b.back();
  std::vector<int> a0(m), b0(m);
  for (int i = 0; i < m; ++i) {
    a0[i] = a[i] - sa;
    b0[i] = b[i] - sb;
  }
  Poly P = schur(a0);
  // multiply by the alternant a_{b0 + delta}
  std::vector<int> mu(m);
  for (int i = 0; i < m; ++i) mu[i] = b0[i] + (m - 1 - i);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, long long> out;
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) inv += perm[i] > perm[j];
    long long sign = inv % 2 ? -1 : 1;
    for (const auto& [e, c] : P) {
      std::vector<int> x(m);
      for (int i = 0; i < m; ++i) x[i] = e[i] + mu[perm[i]];
      bool strict = true;
      for (int i = 0; i + 1 < m && strict; ++i) strict = x[i] > x[i + 1];
      if (!strict) continue;
      std::vector<int> nu(m);
      for (int i = 0; i < m; ++i) nu[i] = x[i] - (m - 1 - i) + sa + sb;
      out[nu] += sign * c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw std::logic_error("negative Littlewood-Richardson coefficient");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

ProductWeight product_weight(std::vector<int> a, std::vector<int> b) {
  if (a.size() != 4 || b.size() != 5) throw std::invalid_argument("product weights have lengths 4 and 5");
  return {GrassWeight{2, 4, std::move(a)}, GrassWeight{3, 5, std::move(b)}};
}

Bundle irreducible_bundle(std::vector<int> a, std::vector<int> b) { return {{product_weight(std::move(a), std::move(b)), 1}}; }

Bundle operator+(const Bundle& x, const Bundle& y) {
  Bundle r = x;
  for (const auto& [w, m] : y) r[w] += m;
  return r;
}

static std::map<std::vector<int>, long long> block_tensor(const GrassWeight& x, const GrassWeight& y) {
  std::vector<int> ua(x.w.begin(), x.w.begin() + x.k), ub(y.w.begin(), y.w.begin() + y.k);
  std::vector<int> qa(x.w.begin() + x.k, x.w.end()), qb(y.w.begin() + y.k, y.w.end());
  std::map<std::vector<int>, long long> out;
  for (const auto& [u, cu] : gl_tensor(ua, ub))
    for (const auto& [q, cq] : gl_tensor(qa, qb)) {
      auto w = u;
      w.insert(w.end(), q.begin(), q.end());
      out[w] += cu * cq;
    }
  return out;
}

Bundle tensor(const Bundle& x, const Bundle& y) {
  Bundle r;
  for (const auto& [wx, mx] : x)
    for (const auto& [wy, my] : y) {
      auto A = block_tensor(wx.a, wy.a), B = block_tensor(wx.b, wy.b);
      for (const auto& [a, ca] : A)
        for (const auto& [b, cb] : B) r[product_weight(a, b)] += mx * my * ca * cb;
    }
  return r;
}

Bundle dual(const Bundle& x) {
  Bundle r;
  for (const auto& [w, m] : x) r[{dual(w.a), dual(w.b)}] += m;
  return r;
}

static long long block_rank(const GrassWeight& g) {
  std::vector<int> u(g.w.begin(), g.w.begin() + g.k), q(g.w.begin() + g.k, g.w.end());
  return weyl_dimension(u) * weyl_dimension(q);
}

long long rank(const Bundle& x) {
  long long r = 0;
  for (const auto& [w, m] : x) r += m * block_rank(w.a) * block_rank(w.b);
  return r;
}

std::map<int, long long> cohomology(const Bundle& x) {
  std::map<int, long long> h;
  for (const auto& [w, m] : x) {
    BottResult a = bott(w.a), b = bott(w.b);
    if (a.zero || b.zero) continue;
    h[a.degree + b.degree] += m * a.dim * b.dim;
  }
  return h;
}

long long euler_characteristic(const Bundle& x) {
  long long chi = 0;
  for (const auto& [d, v] : cohomology(x)) chi += (d % 2 ? -v : v);
  return chi;
}

Bundle bundle_O(int a, int b) { return irreducible_bundle({a, a, 0, 0}, {b, b, b, 0, 0}); }
Bundle bundle_E() { return irreducible_bundle({1, 0, 0, 0}, {1, 1, 0, 0, 0}); }
Bundle bundle_E_dual() { return dual(bundle_E()); }

Bundle lambda_E_dual(int k) {
  if (k == 0) return bundle_O(0, 0);
  Bundle r;
  for (const auto& lam : partitions(k)) {
    if (lam.size() > 2 || lam[0] > 3) continue;
    int l1 = lam[0], l2 = lam.size() > 1 ? lam[1] : 0;
    Partition mu = conjugate(lam);
    mu.resize(3, 0);
    r[product_weight({-l2, -l1, 0, 0}, {mu[0] - k, mu[1] - k, mu[2] - k, 0, 0})] += 1;
  }
  return r;
}

Bundle lambda_E(int k) { return dual(lambda_E_dual(k)); }

Bundle tangent_bundle() {
  return irreducible_bundle({1, 0, 0, -1}, {0, 0, 0, 0, 0}) + irreducible_bundle({0, 0, 0, 0}, {1, 0, 0, 0, -1});
}

Bundle end0_E() {
  Bundle r = tensor(bundle_E(), bundle_E_dual());
  auto triv = product_weight({0, 0, 0, 0}, {0, 0, 0, 0, 0});
  if (--r[triv] == 0) r.erase(triv);
  return r;
}

std::string format_cohomology(const std::map<int, long long>& h) {
  std::string s;
  for (const auto& [d, v] : h)
    if (v) s += (s.empty() ? "" : ", ") + ("h" + std::to_string(d) + "=" + std::to_string(v));
  return s.empty() ? "acyclic" : s;
}

KoszulReport koszul_sections_and_rigidity() {
  KoszulReport r;
  const Bundle O11 = bundle_O(1, 1), T = tangent_bundle(), E = bundle_E();
  r.twisted_vanishing = true;
  for (int k = 0; k <= 6; ++k) {
    Bundle b = tensor(lambda_E_dual(k), O11);
    r.twisted.push_back(cohomology(b));
    r.chi_anticanonical += (k % 2 ? -1 : 1) * euler_characteristic(b);
    if (k >= 2)
      for (const auto& [d, v] : r.twisted.back()) r.twisted_vanishing = r.twisted_vanishing && v == 0;
  }
  auto only_h0 = [](const std::map<int, long long>& h) {
    for (const auto& [d, v] : h)
      if (d > 0 && v) return false;
    return true;
  };
  if (r.twisted_vanishing && only_h0(r.twisted[0]) && only_h0(r.twisted[1])) {
    auto h0 = [](const std::map<int, long long>& h) { return h.count(0) ? h.at(0) : 0; };
    r.h0_anticanonical = h0(r.twisted[0]) - h0(r.twisted[1]);
  } else {
    r.h0_anticanonical = -1;
  }
  r.tg_vanishing = true;
  r.e_required = r.e_acyclic = true;
  for (int i = 0; i <= 6; ++i) {
    Bundle L = lambda_E_dual(i);
    Bundle tg = tensor(T, L), e = tensor(E, L);
    r.tg.push_back(cohomology(tg));
    r.e_terms.push_back(cohomology(e));
    if (r.tg.back().count(i + 1) && r.tg.back().at(i + 1)) r.tg_vanishing = false;
    r.chi_TX += (i % 2 ? -1 : 1) * (euler_characteristic(tg) - euler_characteristic(e));
    if (i >= 2) {
      const auto& h = r.e_terms.back();
      if (h.count(i - 1) && h.at(i - 1)) r.e_required = false;
      for (const auto& [d, v] : h)
        if (v) r.e_acyclic = false;
    }
  }
  r.end0 = cohomology(end0_E());
  r.end0_acyclic = std::all_of(r.end0.begin(), r.end0.end(), [](const auto& kv) { return kv.second == 0; });
  auto h0 = [](const std::map<int, long long>& h) { return h.count(0) ? h.at(0) : 0; };
  r.h0_E_restricted = h0(r.e_terms[0]) - h0(r.e_terms[1]);
  return r;
}

}  // namespace fano
