#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fano4/configurations.hpp"
#include "fano4/models.hpp"

using namespace fano;

TEST(Matchings, Fifteen) {
  auto ms = all_matchings();
  EXPECT_EQ(ms.size(), 15u);
  EXPECT_EQ(parse_matching("(12|34|56)").str(), "(12|34|56)");
  EXPECT_EQ(parse_matching("56|21|34").str(), "(12|34|56)");
  EXPECT_THROW(parse_matching("(12|23|56)"), std::invalid_argument);
  EXPECT_EQ(shared_pairs(parse_matching("(12|34|56)"), parse_matching("(12|35|46)")), 1);
}

TEST(CremonaRichmond, SelfDualConfiguration) {
  Incidence cr = cremona_richmond();
  EXPECT_TRUE(cr.is_configuration(3, 3));
  auto iso = find_isomorphism(cr, cr.transpose());
  ASSERT_TRUE(iso);
  EXPECT_TRUE(verify_isomorphism(cr, cr.transpose(), *iso));
}

TEST(Pentads, SixMatchingThePrintedTable) {
  auto p = enumerate_pentads();
  ASSERT_EQ(p.size(), 6u);
  auto pos = match_printed(p, printed_pentads());
  std::set<int> s(pos.begin(), pos.end());
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(*s.begin(), 0);
}

TEST(Perms, Basics) {
  Perm a = {1, 0, 2}, b = {1, 2, 0};
  EXPECT_EQ(compose(a, inverse(a)), (Perm{0, 1, 2}));
  EXPECT_EQ(perm_order(b), 3);
  EXPECT_EQ(all_perms(4).size(), 24u);
  EXPECT_EQ(transposition(4, 0, 3), (Perm{3, 1, 2, 0}));
}

TEST(Outer, TranspositionGoesToTripleTransposition) {
  auto p = enumerate_pentads();
  Perm img = pentad_action(transposition(6, 0, 1), p);
  auto ct = cycle_type(img);
  EXPECT_EQ(std::count(ct.begin(), ct.end(), 2), 3);
  OuterReport r = s6_outer_check(p, 1);
  EXPECT_TRUE(r.bijective);
  EXPECT_TRUE(r.homomorphism);
  EXPECT_TRUE(r.transitive);
  for (int o : r.stabilizer_orders) EXPECT_EQ(o, 120);
  EXPECT_TRUE(r.stabilizers_without_transpositions);
}

TEST(TenFive, AbstractAndPetersen) {
  TenFive t = abstract_ten_five();
  EXPECT_EQ(t.incidence.points, 5);
  EXPECT_EQ(t.incidence.blocks, 10);
  EXPECT_TRUE(t.incidence.is_configuration(6, 3));
  GraphReport g = petersen(t);
  EXPECT_EQ(g.edges, 15);
  EXPECT_TRUE(g.regular3);
  EXPECT_EQ(g.girth, 5);
}

TEST(TenFive, FromOzekiData) {
  ThetaTensor t = ozeki_theta();
  RankTwoLocus loc = rank2_locus(t, ozeki_tables().p);
  EXPECT_EQ(ozeki_ten_five(t, loc).incidence.in, abstract_ten_five().incidence.in);
}
