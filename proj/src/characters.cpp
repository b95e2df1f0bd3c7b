#include "fano4/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace fano {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition c;
  for (int i = 1; !p.empty() && i <= p[0]; ++i) {
    int n = 0;
    for (int x : p) n += x >= i;
    c.push_back(n);
  }
  return c;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long centralizer_order(const Partition& mu) {
  std::map<int, int> m;
  for (int x : mu) ++m[x];
  long long z = 1;
  for (auto [part, mult] : m) {
    for (int i = 0; i < mult; ++i) z *= part;
    z *= factorial(mult);
  }
  return z;
}

Partition power_type(const Partition& mu, int k) {
  Partition out;
  for (int m : mu) {
    int g = std::gcd(m, k);
    for (int i = 0; i < g; ++i) out.push_back(m / g);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Perm class_representative(const Partition& mu) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  Perm g(n);
  int start = 0;
  for (int m : mu) {
    for (int i = 0; i < m; ++i) g[start + i] = start + (i + 1) % m;
    start += m;
  }
  return g;
}

// Removal of rim hooks on beta-sets.
static long long mn_beta(std::vector<int> beta, const Partition& mu, size_t pos) {
  if (pos == mu.size()) return 1;
  const int m = mu[pos];
  long long total = 0;
  std::set<int> B(beta.begin(), beta.end());
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i], t = b - m;
    if (t < 0 || B.count(t)) continue;
    int between = 0;
    for (int x : beta) between += x > t && x < b;
    auto nb = beta;
    nb[i] = t;
    total += (between % 2 ? -1 : 1) * mn_beta(nb, mu, pos + 1);
  }
  return total;
}

long long mn_character(const Partition& lambda, const Partition& mu) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
  return mn_beta(beta, mu, 0);
}

int CharacterTable::class_index(const Partition& mu) const {
  auto it = std::find(classes.begin(), classes.end(), mu);
  if (it == classes.end()) throw std::invalid_argument("unknown class");
  return static_cast<int>(it - classes.begin());
}

int CharacterTable::irrep_index(const Partition& lambda) const {
  auto it = std::find(irreps.begin(), irreps.end(), lambda);
  if (it == irreps.end()) throw std::invalid_argument("unknown irreducible");
  return static_cast<int>(it - irreps.begin());
}

const CharacterTable& character_table(int n) {
  static std::mutex mu;
  static std::map<int, CharacterTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CharacterTable t;
  t.n = n;
  t.classes = partitions(n);
  t.irreps = t.classes;
  for (const auto& c : t.classes) t.sizes.push_back(factorial(n) / centralizer_order(c));
  for (const auto& l : t.irreps) {
    std::vector<long long> row;
    for (const auto& c : t.classes) row.push_back(mn_character(l, c));
    t.chi.push_back(row);
  }
  return cache[n] = t;
}

bool orthogonality_holds(const CharacterTable& t) {
  const size_t k = t.classes.size();
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      long long s = 0, c = 0;
      for (size_t j = 0; j < k; ++j) s += t.sizes[j] * t.chi[a][j] * t.chi[b][j];
      for (size_t i = 0; i < k; ++i) c += t.chi[i][a] * t.chi[i][b];
      if (s != (a == b ? factorial(t.n) : 0)) return false;
      if (c != (a == b ? centralizer_order(t.classes[a]) : 0)) return false;
    }
  return true;
}

ClassFunction irreducible(int n, const Partition& lambda) {
  const auto& t = character_table(n);
  ClassFunction f{n, {}};
  for (long long x : t.chi[t.irrep_index(lambda)]) f.v.push_back(Rational(static_cast<long>(x)));
  return f;
}

static ClassFunction zip(const ClassFunction& a, const ClassFunction& b, const std::function<Rational(const Rational&, const Rational&)>& op) {
  if (a.n != b.n) throw std::invalid_argument("class functions on different groups");
  ClassFunction r{a.n, {}};
  for (size_t i = 0; i < a.v.size(); ++i) r.v.push_back(op(a.v[i], b.v[i]));
  return r;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}
ClassFunction scaled(const ClassFunction& a, long c) {
  ClassFunction r = a;
  for (auto& x : r.v) x *= c;
  return r;
}

Rational inner(const ClassFunction& a, const ClassFunction& b) {
  const auto& t = character_table(a.n);
  Rational s = 0;
  for (size_t j = 0; j < t.classes.size(); ++j) s += Rational(static_cast<long>(t.sizes[j])) * a.v[j] * b.v[j];
  return s / Rational(static_cast<long>(factorial(a.n)));
}

std::vector<long long> decompose(const ClassFunction& ch) {
  const auto& t = character_table(ch.n);
  std::vector<long long> m;
  for (const auto& l : t.irreps) {
    Rational x = inner(ch, irreducible(ch.n, l));
    if (x.get_den() != 1 || sgn(x) < 0) throw NotACharacter("multiplicity " + x.get_str() + " is not a non-negative integer");
    m.push_back(x.get_num().get_si());
  }
  return m;
}

static ClassFunction adams2(const ClassFunction& ch) {
  const auto& t = character_table(ch.n);
  ClassFunction r{ch.n, {}};
  for (const auto& c : t.classes) r.v.push_back(ch.v[t.class_index(power_type(c, 2))]);
  return r;
}

ClassFunction sym_square(const ClassFunction& ch) {
  ClassFunction r = ch * ch + adams2(ch);
  for (auto& x : r.v) x /= 2;
  return r;
}

ClassFunction alt_square(const ClassFunction& ch) {
  ClassFunction r = ch * ch - adams2(ch);
  for (auto& x : r.v) x /= 2;
  return r;
}

ClassFunction permutation_character(int n) {
  return character_of(n, [](const Perm& g) {
    long fixed = 0;
    for (size_t i = 0; i < g.size(); ++i) fixed += g[i] == static_cast<int>(i);
    return Rational(fixed);
  });
}

ClassFunction character_of(int n, const std::function<Rational(const Perm&)>& trace) {
  const auto& t = character_table(n);
  ClassFunction r{n, {}};
  for (const auto& c : t.classes) r.v.push_back(trace(class_representative(c)));
  return r;
}

static const std::vector<std::pair<std::string, Partition>>& s5_names() {
  static const std::vector<std::pair<std::string, Partition>> names = {
      {"U1", {5}}, {"U1-", {1, 1, 1, 1, 1}}, {"U4", {4, 1}}, {"U4-", {2, 1, 1, 1}},
      {"U5", {3, 2}}, {"U5-", {2, 2, 1}}, {"U6", {3, 1, 1}}};
  return names;
}

Partition s5_partition(const std::string& label) {
  for (const auto& [n, p] : s5_names())
    if (n == label) return p;
  throw std::invalid_argument("unknown S5 label " + label);
}

std::string s5_label(const Partition& p) {
  for (const auto& [n, q] : s5_names())
    if (q == p) return n;
  throw std::invalid_argument("not a partition of 5");
}

ClassFunction s5_irrep(const std::string& label) { return irreducible(5, s5_partition(label)); }

std::map<std::string, long long> s5_multiplicities(const ClassFunction& ch) {
  auto m = decompose(ch);
  const auto& t = character_table(5);
  std::map<std::string, long long> out;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) out[s5_label(t.irreps[i])] = m[i];
  return out;
}

std::string format_decomposition(int n, const std::vector<long long>& mult) {
  const auto& t = character_table(n);
  std::vector<std::pair<std::string, long long>> terms;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i]) continue;
    std::string name;
    if (n == 5) {
      name = s5_label(t.irreps[i]);
    } else {
      name = "[";
      for (size_t k = 0; k < t.irreps[i].size(); ++k) name += (k ? "," : "") + std::to_string(t.irreps[i][k]);
      name += "]";
    }
    terms.emplace_back(name, mult[i]);
  }
  if (n == 5) {
    // order U1, U1-, U4, U4-, U5, U5-, U6
    std::vector<std::pair<std::string, long long>> sorted;
    for (const auto& [nm, p] : s5_names())
      for (const auto& tm : terms)
        if (tm.first == nm) sorted.push_back(tm);
    terms = sorted;
  }
  std::string s;
  for (const auto& [nm, m] : terms) s += (s.empty() ? "" : "+") + (m == 1 ? "" : std::to_string(m)) + nm;
  return s.empty() ? "0" : s;
}

}  // namespace fano
