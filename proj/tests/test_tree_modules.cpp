#include <gtest/gtest.h>

#include <set>

#include "quivercount/catalog.hpp"
#include "quivercount/errors.hpp"
#include "quivercount/tree_modules.hpp"

using namespace quivercount;

namespace {

// Every vertex map T_0 -> Q_0 checked for arrow compatibility, arrow choices multiplied out.
std::uint64_t brute_morphism_count(const Quiver& t, const Quiver& q, bool sincere) {
  const std::size_t n = t.vertex_count();
  std::vector<std::size_t> f(n, 0);
  std::uint64_t total = 0;
  while (true) {
    std::uint64_t ways = 1;
    for (const auto& a : t.arrows()) {
      std::uint64_t c = 0;
      for (const auto& b : q.arrows()) c += b.tail == f[a.tail] && b.head == f[a.head];
      ways *= c;
    }
    if (sincere && std::set<std::size_t>(f.begin(), f.end()).size() != q.vertex_count()) ways = 0;
    total += ways;
    std::size_t i = 0;
    while (i < n && ++f[i] == q.vertex_count()) f[i++] = 0;
    if (i == n) break;
  }
  return total;
}

}  // namespace

TEST(TreeModules, MorphismEnumerationMatchesExhaustion) {
  const std::vector<Quiver> targets{Quiver::loop_quiver(2), parse_quiver("2:0>1,0>1"), parse_quiver("A3"),
                                    parse_quiver("3:0>1,1>0,1>2")};
  for (unsigned d = 1; d <= 4; ++d) {
    for (const auto& e : enumerate_tree_quivers(d)) {
      for (const auto& q : targets) {
        for (bool sincere : {false, true}) {
          EXPECT_EQ(enumerate_morphisms(e.quiver, q, sincere).size(), brute_morphism_count(e.quiver, q, sincere))
              << e.quiver.to_string() << " -> " << q.to_string();
        }
      }
    }
  }
}

TEST(TreeModules, SmallCounts) {
  // A2 in total dimension 2: only the (1,1) module with a nonzero map.
  EXPECT_EQ(tm_count(parse_quiver("A2"), 2).classes.size(), 1u);
  // One loop: J_d(0) is the only tree module of dimension d.
  for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(tm_count(Quiver::loop_quiver(1), d).classes.size(), 1u);
  // Kronecker (1,1): the two coordinate lines.
  EXPECT_EQ(tm_count_vector(parse_quiver("2:0>1,0>1"), {1, 1}).classes.size(), 2u);
}

TEST(TreeModules, LoopQuiverTableThroughFive) {
  const std::vector<BinomialPolyG> expected{
      {{0, 1}},
      {{1, 1}},
      {{2, 4}, {1, 1}},
      {{3, 32}, {2, 20}, {1, 1}},
      {{4, 400}, {3, 428}, {2, 93}, {1, 1}},
  };
  for (unsigned d = 1; d <= 5; ++d) {
    const auto r = tm_sg(d);
    ASSERT_TRUE(r.polynomial);
    EXPECT_EQ(*r.polynomial, expected[d - 1]) << d;
    EXPECT_TRUE(r.anomalies.empty());
  }
}

TEST(TreeModules, BruteForceAgreesWithFormula) {
  for (const auto& [g, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 3}, {2, 4}, {3, 3}}) {
    const auto brute = tm_sg_bruteforce(g, d);
    EXPECT_EQ(Rational(*brute.count), (*tm_sg(d).polynomial)(Rational(g))) << g << "," << d;
  }
  EXPECT_EQ(*tm_sg_bruteforce(2, 4).count, 22);
}

TEST(TreeModules, CoverClassesBijectToBruteForce) {
  const auto via = tm_sg_via_cover(2, 4);
  const auto brute = tm_sg_bruteforce(2, 4);
  ASSERT_EQ(via.classes.size(), brute.classes.size());
  std::set<std::size_t> hit;
  for (const auto& m : match_classes(via, brute)) {
    ASSERT_TRUE(m);
    hit.insert(*m);
  }
  EXPECT_EQ(hit.size(), brute.classes.size());
}

TEST(TreeModules, RepresentativesAreSparse) {
  for (const auto& c : tm_sg_bruteforce(2, 4).classes) {
    EXPECT_TRUE(has_tree_sparsity(c.representative));
    EXPECT_EQ(c.structure.source, c.tree);
  }
  const RationalField k;
  auto m = zero_maps_rep(k, Quiver::loop_quiver(1), {2});
  m.maps[0](0, 1) = 2;
  EXPECT_FALSE(has_tree_sparsity(m));
}

TEST(TreeModules, StarAndTwoTwoOne) {
  const auto star = parse_quiver("5:1>0,2>0,3>0,4>0");
  EXPECT_EQ(tm_count_vector(star, {2, 1, 1, 1, 1}).classes.size(), 6u);
  const auto q = Quiver(3, {{1, 0}, {1, 0}, {2, 1}});
  EXPECT_EQ(tm_count_vector(q, {2, 2, 1}).classes.size(), 5u);
}

TEST(TreeModules, LeadingTerm) {
  for (unsigned d = 1; d <= 5; ++d) EXPECT_TRUE(leading_term_check(d).ok()) << d;
}

TEST(TreeModules, Guards) {
  EXPECT_THROW(tm_sg(7), ResourceError);
  TMOptions tight;
  tight.brute_force_guard = 10;
  EXPECT_THROW(tm_sg_bruteforce(3, 4, tight), ResourceError);
  EXPECT_THROW(tm_count_vector(parse_quiver("A2"), {1, 0}), InputError);
}

TEST(TreeModules, ReportsAreSeedIndependent) {
  TMOptions a;
  TMOptions b;
  b.seed = 99;
  EXPECT_EQ(*tm_sg(4, a).polynomial, *tm_sg(4, b).polynomial);
}
