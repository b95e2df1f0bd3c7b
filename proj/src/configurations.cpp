#include "fano4/configurations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace fano {

Matching make_matching(std::array<std::pair<int, int>, 3> pairs) {
  for (auto& pr : pairs)
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  std::sort(pairs.begin(), pairs.end());
  return Matching{pairs};
}

std::string Matching::str() const {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += "|";
    s += std::to_string(pairs[i].first) + std::to_string(pairs[i].second);
  }
  return s + ")";
}

Matching parse_matching(const std::string& s) {
  std::vector<int> d;
  for (char c : s)
    if (c >= '1' && c <= '6') d.push_back(c - '0');
  if (d.size() != 6) throw std::invalid_argument("bad matching: " + s);
  auto m = make_matching({{{d[0], d[1]}, {d[2], d[3]}, {d[4], d[5]}}});
  std::set<int> seen(d.begin(), d.end());
  if (seen.size() != 6) throw std::invalid_argument("bad matching: " + s);
  return m;
}

std::vector<Matching> all_matchings() {
  std::set<Matching> out;
  std::vector<int> p{1, 2, 3, 4, 5, 6};
  do out.insert(make_matching({{{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}}}));
  while (std::next_permutation(p.begin(), p.end()));
  return {out.begin(), out.end()};
}

int shared_pairs(const Matching& a, const Matching& b) {
  int n = 0;
  for (const auto& x : a.pairs)
    for (const auto& y : b.pairs) n += x == y;
  return n;
}

Matching apply(const Perm& g, const Matching& m) {
  std::array<std::pair<int, int>, 3> q;
  for (int i = 0; i < 3; ++i) q[i] = {g[m.pairs[i].first - 1] + 1, g[m.pairs[i].second - 1] + 1};
  return make_matching(q);
}

std::vector<int> Incidence::row_sums() const {
  std::vector<int> r(points, 0);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < blocks; ++j) r[i] += in[i][j];
  return r;
}

std::vector<int> Incidence::col_sums() const {
  std::vector<int> c(blocks, 0);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < blocks; ++j) c[j] += in[i][j];
  return c;
}

bool Incidence::is_configuration(int r, int k) const {
  auto rs = row_sums(), cs = col_sums();
  return std::all_of(rs.begin(), rs.end(), [&](int x) { return x == r; }) &&
         std::all_of(cs.begin(), cs.end(), [&](int x) { return x == k; });
}

Incidence Incidence::transpose() const {
  Incidence t;
  t.points = blocks;
  t.blocks = points;
  t.in.assign(blocks, std::vector<bool>(points));
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < blocks; ++j) t.in[j][i] = in[i][j];
  return t;
}

Incidence cremona_richmond() {
  auto ms = all_matchings();
  Incidence c;
  std::vector<std::pair<int, int>> pts;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) pts.emplace_back(a, b);
  c.points = static_cast<int>(pts.size());
  c.blocks = static_cast<int>(ms.size());
  c.in.assign(c.points, std::vector<bool>(c.blocks));
  for (int i = 0; i < c.points; ++i)
    for (int j = 0; j < c.blocks; ++j)
      c.in[i][j] = std::find(ms[j].pairs.begin(), ms[j].pairs.end(), pts[i]) != ms[j].pairs.end();
  return c;
}

bool verify_isomorphism(const Incidence& a, const Incidence& b, const IncidenceIso& f) {
  if (a.points != b.points || a.blocks != b.blocks) return false;
  for (int i = 0; i < a.points; ++i)
    for (int j = 0; j < a.blocks; ++j)
      if (a.in[i][j] != b.in[f.point_map[i]][f.block_map[j]]) return false;
  auto bij = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != static_cast<int>(i)) return false;
    return true;
  };
  return bij(f.point_map) && bij(f.block_map);
}

// Backtracking on the point map; the block map is then forced by the
// image of each block's point set.
std::optional<IncidenceIso> find_isomorphism(const Incidence& a, const Incidence& b) {
  if (a.points != b.points || a.blocks != b.blocks) return std::nullopt;
  const int n = a.points;
  IncidenceIso f;
  f.point_map.assign(n, -1);
  std::vector<bool> used(n, false);
  auto blocks_of = [](const Incidence& s, int pt) {
    std::vector<int> v;
    for (int j = 0; j < s.blocks; ++j)
      if (s.in[pt][j]) v.push_back(j);
    return v;
  };
  // two points share a block in a iff their images share one in b
  auto collinear = [](const Incidence& s, int x, int y) {
    for (int j = 0; j < s.blocks; ++j)
      if (s.in[x][j] && s.in[y][j]) return true;
    return false;
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) {
      f.block_map.assign(a.blocks, -1);
      for (int j = 0; j < a.blocks; ++j) {
        std::vector<bool> want(n, false);
        for (int x = 0; x < n; ++x)
          if (a.in[x][j]) want[f.point_map[x]] = true;
        for (int k = 0; k < b.blocks; ++k) {
          bool ok = true;
          for (int y = 0; y < n && ok; ++y) ok = b.in[y][k] == want[y];
          if (ok) {
            f.block_map[j] = k;
            break;
          }
        }
        if (f.block_map[j] < 0) return false;
      }
      return verify_isomorphism(a, b, f);
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || blocks_of(a, i).size() != blocks_of(b, c).size()) continue;
      bool ok = true;
      for (int x = 0; x < i && ok; ++x) ok = collinear(a, x, i) == collinear(b, f.point_map[x], c);
      if (!ok) continue;
      used[c] = true;
      f.point_map[i] = c;
      if (rec(i + 1)) return true;
      used[c] = false;
      f.point_map[i] = -1;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

static Pentad sorted_pentad(Pentad p) {
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Pentad> enumerate_pentads() {
  auto ms = all_matchings();
  std::vector<Pentad> out;
  const int n = static_cast<int>(ms.size());
  std::vector<int> idx(5);
  std::function<void(int, int)> rec = [&](int depth, int start) {
    if (depth == 5) {
      Pentad p;
      for (int i = 0; i < 5; ++i) p[i] = ms[idx[i]];
      out.push_back(p);
      return;
    }
    for (int c = start; c < n; ++c) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) ok = shared_pairs(ms[idx[i]], ms[c]) == 0;
      if (!ok) continue;
      idx[depth] = c;
      rec(depth + 1, c + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Pentad> printed_pentads() {
  const char* rows[5][6] = {
      {"12|34|56", "12|34|56", "12|35|46", "12|35|46", "12|36|45", "12|36|45"},
      {"13|25|46", "13|26|45", "13|24|56", "13|26|45", "13|25|46", "13|24|56"},
      {"14|26|35", "14|25|36", "14|25|36", "14|23|56", "14|23|56", "14|26|35"},
      {"15|24|36", "15|23|46", "15|26|34", "15|24|36", "15|26|34", "15|23|46"},
      {"16|23|45", "16|24|35", "16|23|45", "16|25|34", "16|24|35", "16|25|34"}};
  std::vector<Pentad> out(6);
  for (int c = 0; c < 6; ++c) {
    for (int r = 0; r < 5; ++r) out[c][r] = parse_matching(rows[r][c]);
    out[c] = sorted_pentad(out[c]);
  }
  return out;
}

std::vector<int> match_printed(const std::vector<Pentad>& found, const std::vector<Pentad>& printed) {
  std::vector<int> pos;
  for (const auto& p : printed) {
    auto it = std::find(found.begin(), found.end(), sorted_pentad(p));
    pos.push_back(it == found.end() ? -1 : static_cast<int>(it - found.begin()));
  }
  return pos;
}

Perm pentad_action(const Perm& g, const std::vector<Pentad>& pentads) {
  Perm out;
  for (const auto& p : pentads) {
    Pentad q;
    for (int i = 0; i < 5; ++i) q[i] = apply(g, p[i]);
    q = sorted_pentad(q);
    auto it = std::find(pentads.begin(), pentads.end(), q);
    if (it == pentads.end()) throw std::logic_error("pentads not stable under S6");
    out.push_back(static_cast<int>(it - pentads.begin()));
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

Perm transposition(int n, int i, int j) {
  Perm g(n);
  std::iota(g.begin(), g.end(), 0);
  std::swap(g[i], g[j]);
  return g;
}

std::vector<Perm> all_perms(int n) {
  Perm g(n);
  std::iota(g.begin(), g.end(), 0);
  std::vector<Perm> out;
  do out.push_back(g);
  while (std::next_permutation(g.begin(), g.end()));
  return out;
}

std::vector<int> cycle_type(const Perm& g) {
  std::vector<int> t;
  std::vector<bool> seen(g.size(), false);
  for (size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

int perm_order(const Perm& g) {
  int o = 1;
  for (int c : cycle_type(g)) o = std::lcm(o, c);
  return o;
}

OuterReport s6_outer_check(const std::vector<Pentad>& pentads, uint64_t seed) {
  OuterReport r;
  r.image_of_12 = pentad_action(transposition(6, 0, 1), pentads);
  r.image_of_12_type = cycle_type(r.image_of_12);
  auto perms = all_perms(6);
  std::set<Perm> images;
  bool trans_ok = true;
  for (const auto& g : perms) {
    Perm h = pentad_action(g, pentads);
    images.insert(h);
    if (cycle_type(g) == std::vector<int>{2, 1, 1, 1, 1}) trans_ok = trans_ok && cycle_type(h) == std::vector<int>{2, 2, 2};
  }
  r.bijective = images.size() == 720;
  r.transpositions_to_triple = trans_ok;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
  r.homomorphism = true;
  for (int k = 0; k < 100; ++k) {
    const Perm &a = perms[pick(rng)], &b = perms[pick(rng)];
    if (pentad_action(compose(a, b), pentads) != compose(pentad_action(a, pentads), pentad_action(b, pentads)))
      r.homomorphism = false;
  }
  r.stabilizers_without_transpositions = true;
  std::set<int> orbit;
  for (size_t i = 0; i < pentads.size(); ++i) {
    int order = 0;
    for (const auto& g : perms) {
      Perm h = pentad_action(g, pentads);
      orbit.insert(h[0]);
      if (h[i] != static_cast<int>(i)) continue;
      ++order;
      if (cycle_type(g) == std::vector<int>{2, 1, 1, 1, 1}) r.stabilizers_without_transpositions = false;
    }
    r.stabilizer_orders.push_back(order);
  }
  r.transitive = orbit.size() == pentads.size();
  return r;
}

TenFive abstract_ten_five() {
  TenFive c;
  for (int j = 1; j <= 5; ++j)
    for (int k = j + 1; k <= 5; ++k) c.hyperplanes.emplace_back(j, k);
  c.incidence.points = 5;
  c.incidence.blocks = 10;
  c.incidence.in.assign(5, std::vector<bool>(10));
  for (int i = 1; i <= 5; ++i)
    for (int h = 0; h < 10; ++h) c.incidence.in[i - 1][h] = i != c.hyperplanes[h].first && i != c.hyperplanes[h].second;
  return c;
}

TenFive ozeki_ten_five(const ThetaTensor& t, const RankTwoLocus& loc) {
  TenFive c;
  c.incidence.points = 5;
  c.incidence.blocks = 10;
  c.incidence.in.assign(5, std::vector<bool>(10));
  Field f = t.field;
  int h = 0;
  for (const auto& [pq, e] : loc.e) {
    c.hyperplanes.push_back(pq);
    // V = {x : theta_i(e, x) = 0}
    std::vector<Vec> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(t.comp[i].transpose() * e);
    auto V = Matrix::from_rows(rows, f).kernel();
    if (V.size() != 3) throw Inconsistent("singular 3-space of C4 has dimension " + std::to_string(V.size()));
    // theta(v)|V as a linear map V4 -> 3 pairings
    std::vector<Vec> lin;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        Vec r;
        for (int i = 0; i < 4; ++i) r.push_back(form_eval(t.comp[i], V[a], V[b]));
        lin.push_back(r);
      }
    auto H = Matrix::from_rows(lin, f).kernel();
    if (H.size() != 3) throw Inconsistent("H_pq is not a hyperplane");
    for (int i = 0; i < 5; ++i) {
      auto with = H;
      with.push_back(loc.points[i]);
      c.incidence.in[i][h] = span_rank(with) == 3;
    }
    ++h;
  }
  return c;
}

GraphReport petersen(const TenFive& c) {
  const int n = static_cast<int>(c.hyperplanes.size());
  std::vector<std::vector<int>> adj(n);
  GraphReport g;
  g.vertices = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto [i, j] = c.hyperplanes[a];
      auto [k, l] = c.hyperplanes[b];
      if (i != k && i != l && j != k && j != l) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++g.edges;
      }
    }
  g.regular3 = std::all_of(adj.begin(), adj.end(), [](const auto& v) { return v.size() == 3; });
  // shortest cycle through each vertex by breadth-first search
  int girth = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (girth == 0 || len < girth) girth = len;
        }
      }
    }
  }
  g.girth = girth;
  return g;
}

}  // namespace fano
