#include "fano4/ledger.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "fano4/matrix.hpp"

namespace fano {

Dp5Class Dp5Class::one() {
  Dp5Class c;
  c.c0 = 1;
  return c;
}

Dp5Class Dp5Class::hyperplane() {
  Dp5Class c;
  c.h = 1;
  return c;
}

Dp5Class Dp5Class::line(int i) {
  Dp5Class c;
  c.l[i] = 1;
  return c;
}

Dp5Class Dp5Class::operator+(const Dp5Class& o) const {
  Dp5Class r = *this;
  r.c0 += o.c0;
  r.h += o.h;
  for (int i = 0; i < 4; ++i) r.l[i] += o.l[i];
  r.pt += o.pt;
  return r;
}

Dp5Class Dp5Class::operator-(const Dp5Class& o) const { return *this + o * Rational(-1); }

Dp5Class Dp5Class::operator*(const Rational& x) const {
  Dp5Class r = *this;
  r.c0 *= x;
  r.h *= x;
  for (auto& y : r.l) y *= x;
  r.pt *= x;
  return r;
}

Dp5Class Dp5Class::operator*(const Dp5Class& o) const {
  Dp5Class r;
  r.c0 = c0 * o.c0;
  r.h = c0 * o.h + h * o.c0;
  for (int i = 0; i < 4; ++i) r.l[i] = c0 * o.l[i] + l[i] * o.c0;
  r.pt = c0 * o.pt + pt * o.c0 + h * o.h;
  for (int i = 0; i < 4; ++i) r.pt -= l[i] * o.l[i];
  return r;
}

bool Dp5Class::operator==(const Dp5Class& o) const { return c0 == o.c0 && h == o.h && l == o.l && pt == o.pt; }

Dp5Class Dp5Class::inverse() const {
  if (sgn(c0) == 0) throw std::domain_error("Dp5Class::inverse: zero constant term");
  // (c0 + n)^-1 = c0^-1 (1 - m + m^2) with m = n / c0 nilpotent of order 3
  Dp5Class m = *this * Rational(1 / c0);
  m.c0 = 0;
  return (one() - m + m * m) * Rational(1 / c0);
}

std::string Dp5Class::str() const {
  std::ostringstream s;
  auto term = [&](const Rational& c, const std::string& name) {
    if (sgn(c) == 0) return;
    if (s.tellp() > 0) s << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) s << "-";
    Rational a = abs(c);
    if (a != 1 || name.empty()) s << a;
    if (!name.empty()) s << (a != 1 ? "*" : "") << name;
  };
  term(c0, "");
  term(h, "h");
  for (int i = 0; i < 4; ++i) term(l[i], "l" + std::to_string(i + 1));
  term(pt, "pt");
  return s.tellp() > 0 ? s.str() : "0";
}

std::vector<SegreReading> segre_readings() {
  Dp5Class one = Dp5Class::one(), h = Dp5Class::hyperplane();
  Dp5Class L;
  for (int i = 0; i < 4; ++i) L = L + Dp5Class::line(i);
  auto alpha_of = [](const Dp5Class& s) { return Rational(s.pt / Rational(-4)); };
  std::vector<SegreReading> out;

  // printed: 1 - h + 2 sum l + 2 sum l^2
  Dp5Class printed = one - h + L * Rational(2);
  printed.pt = -8;
  out.push_back({"printed", printed, alpha_of(printed)});

  // literal: s(Q)|pi * prod_q c(O_l(1))^2 with c(i_* O_l(1)) = 1 + l + 2 l^2
  Dp5Class lit = one - h;
  for (int i = 0; i < 4; ++i) {
    Dp5Class li = Dp5Class::line(i);
    Dp5Class c = one + li + li * li * Rational(2);
    lit = lit * c * c;
  }
  out.push_back({"literal_product", lit, alpha_of(lit)});

  // exact sequence: N_p = Q (x) O(-sum l), c(Q)|pi = 1 + h + h^2
  Dp5Class c1q = h, c2q = h * h, c1l = L * Rational(-1);
  Dp5Class cn = one + c1q + c1l * Rational(2) + c2q + c1q * c1l + c1l * c1l;
  Dp5Class s = cn.inverse();
  out.push_back({"exact_sequence", s, alpha_of(s)});
  return out;
}

static std::array<int, 4> sorted4(int a, int b, int c, int d) {
  std::array<int, 4> m{a, b, c, d};
  std::sort(m.begin(), m.end());
  return m;
}

Rational DivisorTable::at(int a, int b, int c, int d) const {
  auto it = v.find(sorted4(a, b, c, d));
  return it == v.end() ? Rational(0) : it->second;
}

void DivisorTable::set(int a, int b, int c, int d, const Rational& x) {
  if (sgn(x) == 0) v.erase(sorted4(a, b, c, d));
  else v[sorted4(a, b, c, d)] = x;
}

Rational DivisorTable::eval(const std::array<std::array<Rational, 6>, 4>& d) const {
  Rational s = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int e = 0; e < 6; ++e) {
          Rational w = d[0][a] * d[1][b] * d[2][c] * d[3][e];
          if (sgn(w) != 0) s += w * at(a, b, c, e);
        }
  return s;
}

// (number of H, sorted multiplicities of distinct F indices)
static std::pair<int, std::vector<int>> pattern(const std::array<int, 4>& m) {
  int hs = 0;
  std::map<int, int> f;
  for (int x : m) {
    if (x == 0) ++hs;
    else ++f[x];
  }
  std::vector<int> mult;
  for (auto [k, c] : f) mult.push_back(c);
  std::sort(mult.rbegin(), mult.rend());
  return {hs, mult};
}

bool DivisorTable::s5_invariant() const {
  std::map<std::pair<int, std::vector<int>>, Rational> seen;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b)
      for (int c = b; c < 6; ++c)
        for (int d = c; d < 6; ++d) {
          auto key = pattern({a, b, c, d});
          Rational x = at(a, b, c, d);
          auto [it, fresh] = seen.emplace(key, x);
          if (!fresh && it->second != x) return false;
        }
  return true;
}

std::array<Rational, 5> DivisorTable::h_numbers() const {
  std::array<Rational, 6> h1{1, 0, 0, 0, 0, 0}, h2{3, -1, -1, -1, -1, -1};
  std::array<Rational, 5> out;
  for (int i = 0; i < 5; ++i) {
    std::array<std::array<Rational, 6>, 4> d;
    for (int j = 0; j < 4; ++j) d[j] = j < 4 - i ? h1 : h2;
    out[i] = eval(d);
  }
  return out;
}

std::string monomial_name(const std::array<int, 4>& m) {
  auto [hs, mult] = pattern(m);
  std::string s;
  static const char* letters = "pqrs";
  for (size_t i = 0; i < mult.size(); ++i) {
    s += std::string(s.empty() ? "" : " ") + "F_" + letters[i];
    if (mult[i] > 1) s += "^" + std::to_string(mult[i]);
  }
  if (hs) {
    s += std::string(s.empty() ? "" : " ") + "H1";
    if (hs > 1) s += "^" + std::to_string(hs);
  }
  return s;
}

DivisorTable printed_table() {
  DivisorTable t;
  t.set(0, 0, 0, 0, 2);
  for (int p = 1; p <= 5; ++p) {
    t.set(p, p, p, p, 12);
    t.set(p, p, p, 0, -1);
    t.set(p, p, 0, 0, -1);
    for (int q = 1; q <= 5; ++q) {
      if (q == p) continue;
      t.set(p, p, p, q, -2);
      t.set(p, p, q, q, 1);
    }
  }
  return t;
}

int gen_E(int p, int q) { return 10 + 5 * std::min(p, q) + std::max(p, q); }

namespace {

constexpr int H = -1;

bool is_F(int g) { return g >= 0 && g < 5; }
bool is_E(int g) { return g >= 10; }
std::pair<int, int> e_pair(int g) { return {(g - 10) / 5, (g - 10) % 5}; }

// Linear form on Sigma_p: coefficients of h and l_q (indexed by q in 0..4, q != p)
struct SigmaForm {
  Rational h;
  std::array<Rational, 5> l{};
};

Rational sigma_pair(const SigmaForm& a, const SigmaForm& b) {
  Rational s = a.h * b.h;
  for (int q = 0; q < 5; ++q) s -= a.l[q] * b.l[q];
  return s;
}

}  // namespace

Rational BlowupModel::g1(const std::vector<int>& mono) const {
  std::vector<int> fs, rest;
  for (int g : mono) (is_F(g) ? fs : rest).push_back(g);
  if (fs.empty()) {
    bool all_h = std::all_of(rest.begin(), rest.end(), [](int g) { return g == H; });
    if (all_h) return 2;
    bool same_e = is_E(rest[0]) && std::all_of(rest.begin(), rest.end(), [&](int g) { return g == rest[0]; });
    return same_e ? Rational(-1) : Rational(0);
  }
  for (int f : fs)
    if (f != fs[0]) return 0;
  const int p = fs[0], k = static_cast<int>(fs.size()) - 1;
  std::vector<SigmaForm> forms;
  for (int g : rest) {
    SigmaForm f;
    if (g == H) {
      f.h = 1;
    } else {
      auto [a, b] = e_pair(g);
      if (a != p && b != p) return 0;
      f.l[a == p ? b : a] = 1;
    }
    forms.push_back(f);
  }
  SigmaForm s1;
  s1.h = -1;
  for (int q = 0; q < 5; ++q)
    if (q != p) s1.l[q] = 2;
  switch (k) {
    case 0: return 0;
    case 1: return -sigma_pair(forms[0], forms[1]);
    case 2: return sigma_pair(s1, forms[0]);
    default: return 4 * alpha;
  }
}

DivisorTable BlowupModel::x4_table() const {
  auto pull = [](int basis) {
    std::vector<int> gens;
    if (basis == 0) return std::vector<int>{H};
    int p = basis - 1;
    gens.push_back(p);
    for (int q = 0; q < 5; ++q)
      if (q != p) gens.push_back(gen_E(p, q));
    return gens;
  };
  DivisorTable t;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b)
      for (int c = b; c < 6; ++c)
        for (int d = c; d < 6; ++d) {
          auto pa = pull(a), pb = pull(b), pc = pull(c), pd = pull(d);
          Rational s = 0;
          for (int x : pa)
            for (int y : pb)
              for (int z : pc)
                for (int w : pd) s += g1({x, y, z, w});
          t.set(a, b, c, d, s);
        }
  return t;
}

static int gram_rank(const DivisorTable& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) pairs.emplace_back(a, b);
  Matrix m(21, 21, Field::rationals());
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) m(i, j) = Scalar(t.at(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second));
  return m.rank();
}

static Rational sum_f4(const DivisorTable& t) {
  std::array<Rational, 6> f{0, 1, 1, 1, 1, 1};
  return t.eval({f, f, f, f});
}

LedgerAudit blowup_ledger_audit(const std::array<Rational, 5>& h_expected) {
  LedgerAudit a;
  a.readings = segre_readings();
  a.alpha = a.readings.back().alpha;
  a.h_expected = h_expected;
  BlowupModel m{a.alpha};

  const int p = 0, q = 1;
  const int F = p, Epq = gen_E(p, q);
  a.g1_numbers = {
      {"(F1_p)^4", 8, m.g1({F, F, F, F})},
      {"(F1_p)^3 H1", -1, m.g1({F, F, F, H})},
      {"(F1_p)^2 H1^2", -1, m.g1({F, F, H, H})},
      {"F1_p H1^3", 0, m.g1({F, H, H, H})},
      {"(F1_p)^3 E1_pq", -2, m.g1({F, F, F, Epq})},
      {"(F1_p)^2 (E1_pq)^2", 1, m.g1({F, F, Epq, Epq})},
      {"F1_p (E1_pq)^3", 0, m.g1({F, Epq, Epq, Epq})},
      {"F1_p E1_rq", 0, m.g1({F, F, F, gen_E(2, 3)})},
  };

  a.recomputed = m.x4_table();
  DivisorTable printed = printed_table();
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      for (int k = j; k < 6; ++k)
        for (int l = k; l < 6; ++l) {
          std::array<int, 4> mono{i, j, k, l};
          // one representative per pattern, with F indices in first-use order
          std::map<int, int> rename;
          bool canonical = true;
          int next = 1;
          for (int x : mono)
            if (x) {
              if (!rename.count(x)) rename[x] = next++;
              canonical = canonical && rename[x] == x;
            }
          if (!canonical) continue;
          Rational pr = printed.at(i, j, k, l), rc = a.recomputed.at(i, j, k, l);
          if (sgn(pr) == 0 && sgn(rc) == 0) continue;
          std::string name = monomial_name(mono);
          if (std::any_of(a.table.begin(), a.table.end(), [&](const LedgerEntry& e) { return e.name == name; })) continue;
          a.table.push_back({name, pr, rc});
        }

  a.h_numbers = a.recomputed.h_numbers();
  a.h_match = a.h_numbers == h_expected;
  a.s5_invariant = a.recomputed.s5_invariant();
  a.vanishing_rules = sgn(a.recomputed.at(0, 1, 2, 2)) == 0 && sgn(a.recomputed.at(0, 0, 1, 2)) == 0 &&
                      sgn(a.recomputed.at(0, 1, 1, 2)) == 0 && sgn(a.recomputed.at(1, 1, 2, 3)) == 0 &&
                      sgn(a.recomputed.at(1, 2, 3, 4)) == 0;

  // (c*D1)(c*D2)(c*D3) E1_pq = 0 for all basis divisors
  a.projection_formula = true;
  auto pull = [](int basis) {
    if (basis == 0) return std::vector<int>{H};
    std::vector<int> gens{basis - 1};
    for (int r = 0; r < 5; ++r)
      if (r != basis - 1) gens.push_back(gen_E(basis - 1, r));
    return gens;
  };
  for (int x = 0; x < 6; ++x)
    for (int y = x; y < 6; ++y)
      for (int z = y; z < 6; ++z) {
        Rational s = 0;
        for (int u : pull(x))
          for (int v : pull(y))
            for (int w : pull(z)) s += m.g1({u, v, w, Epq});
        if (sgn(s) != 0) a.projection_formula = false;
      }

  a.f4_sum = sum_f4(a.recomputed);
  a.f4_sum_printed = sum_f4(printed);
  // H2^4 = 81 H1^4 - 108 H1^3 F + 54 H1^2 F^2 - 12 H1 F^3 + F^4
  {
    DivisorTable no_f4 = a.recomputed;
    for (int r = 1; r <= 5; ++r)
      for (int s = 1; s <= 5; ++s)
        for (int u = 1; u <= 5; ++u)
          for (int w = 1; w <= 5; ++w) no_f4.set(r, s, u, w, 0);
    a.f4_sum_forced = h_expected[4] - no_f4.h_numbers()[4];
  }
  Rational pf = 0;
  for (int u : pull(1))
    for (int v : pull(1))
      for (int w : pull(1))
        for (int x : pull(1)) pf += m.g1({u, v, w, x});
  a.pullback_fp4 = pf;

  for (const auto& r : a.readings) {
    DivisorTable t = BlowupModel{r.alpha}.x4_table();
    a.alternatives.push_back({r.name, r.alpha, t.h_numbers()[4], gram_rank(t)});
  }
  a.alternatives.push_back({"printed_table", Rational(0), printed.h_numbers()[4], gram_rank(printed)});
  return a;
}

SquareMapReport k3_and_square_map(const DivisorTable& t) {
  SquareMapReport r;
  // K3 lattice on h1, h2, f1..f5
  std::vector<std::array<Rational, 6>> basis(7);
  basis[0] = {1, 0, 0, 0, 0, 0};
  basis[1] = {3, -1, -1, -1, -1, -1};
  for (int i = 0; i < 5; ++i) {
    basis[2 + i] = {0, 0, 0, 0, 0, 0};
    basis[2 + i][1 + i] = 1;
  }
  r.k3.assign(7, std::vector<Rational>(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) r.k3[i][j] = t.eval({basis[i], basis[j], basis[0], basis[1]});

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) pairs.emplace_back(a, b);
  const int n = static_cast<int>(pairs.size());
  Matrix m(n, n, Field::rationals());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Scalar(t.at(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second));
  r.gram_rank = m.rank();
  std::vector<Vec> ker = m.kernel();
  r.kernel_dim = static_cast<int>(ker.size());

  auto act = [](const Perm& g, int x) { return x == 0 ? 0 : 1 + g[x - 1]; };
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  auto permute = [&](const Perm& g, const Vec& v) {
    Vec w(n);
    for (int i = 0; i < n; ++i) w[pair_index(act(g, pairs[i].first), act(g, pairs[i].second))] = v[i];
    return w;
  };

  ClassFunction pic = character_of(5, [&](const Perm& g) {
    Rational s = 0;
    for (int x = 0; x < 6; ++x) s += act(g, x) == x;
    return s;
  });
  ClassFunction s2 = sym_square(pic);
  ClassFunction kc = character_of(5, [&](const Perm& g) {
    if (ker.empty()) return Rational(0);
    Matrix b = Matrix::from_cols(ker, Field::rationals());
    Rational tr = 0;
    for (size_t j = 0; j < ker.size(); ++j) {
      Vec x;
      if (!b.solve(permute(g, ker[j]), &x)) throw std::logic_error("kernel of the square map is not S5-stable");
      tr += x[j].rational();
    }
    return tr;
  });
  r.pic_type = format_decomposition(5, decompose(pic));
  r.sym2_type = format_decomposition(5, decompose(s2));
  r.kernel_type = format_decomposition(5, decompose(kc));
  r.image_type = format_decomposition(5, decompose(s2 - kc));
  return r;
}

}  // namespace fano
