// Cremona-Richmond combinatorics: matchings of {1..6}, pentads, the outer
// automorphism of S6, and the (10_3, 5_6) configuration.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano4/models.hpp"

namespace fano {

using Perm = std::vector<int>;  // images of 0..n-1

// (ab|cd|ef), pairs sorted internally and among themselves; 1-indexed.
struct Matching {
  std::array<std::pair<int, int>, 3> pairs;
  std::string str() const;
  bool operator==(const Matching& o) const { return pairs == o.pairs; }
  bool operator<(const Matching& o) const { return pairs < o.pairs; }
};
Matching make_matching(std::array<std::pair<int, int>, 3> pairs);
Matching parse_matching(const std::string& s);
std::vector<Matching> all_matchings();
int shared_pairs(const Matching& a, const Matching& b);
Matching apply(const Perm& g, const Matching& m);

struct Incidence {
  int points = 0, blocks = 0;
  std::vector<std::vector<bool>> in;  // points x blocks
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  bool is_configuration(int r, int k) const;  // each point on r blocks, each block has k points
  Incidence transpose() const;
};
Incidence cremona_richmond();
// Isomorphism between an incidence structure and another: point map and
// block map; nullopt if none exists.
struct IncidenceIso {
  std::vector<int> point_map, block_map;
};
std::optional<IncidenceIso> find_isomorphism(const Incidence& a, const Incidence& b);
bool verify_isomorphism(const Incidence& a, const Incidence& b, const IncidenceIso& f);

using Pentad = std::array<Matching, 5>;  // sorted
std::vector<Pentad> enumerate_pentads();
// The printed table, columns A..F.
std::vector<Pentad> printed_pentads();
// Position of each printed column in the enumerated list (-1 if absent).
std::vector<int> match_printed(const std::vector<Pentad>& found, const std::vector<Pentad>& printed);
Perm pentad_action(const Perm& g, const std::vector<Pentad>& pentads);

Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& a);
Perm transposition(int n, int i, int j);
std::vector<Perm> all_perms(int n);
std::vector<int> cycle_type(const Perm& g);  // sorted descending, without 1-cycles dropped
int perm_order(const Perm& g);

struct OuterReport {
  Perm image_of_12;
  std::vector<int> image_of_12_type;
  bool bijective = false;
  bool homomorphism = false;
  bool transpositions_to_triple = false;
  std::vector<int> stabilizer_orders;
  bool stabilizers_without_transpositions = false;
  bool transitive = false;
};
OuterReport s6_outer_check(const std::vector<Pentad>& pentads, uint64_t seed);

// (10_3, 5_6): hyperplanes H_jk (pairs of 1..5) and points p_i.
struct TenFive {
  std::vector<PairIndex> hyperplanes;
  Incidence incidence;  // points p_1..p_5 x hyperplanes
};
TenFive abstract_ten_five();
// Same incidence read off the Ozeki data: H_pq is the kernel of
// v -> theta(v)|V for the 3-space V = {x : theta_i(e_pq, x) = 0}.
TenFive ozeki_ten_five(const ThetaTensor& t, const RankTwoLocus& loc);

struct GraphReport {
  int vertices = 0, edges = 0;
  bool regular3 = false;
  int girth = 0;
};
// Graph on the hyperplanes, edges between disjoint index pairs.
GraphReport petersen(const TenFive& c);

}  // namespace fano
