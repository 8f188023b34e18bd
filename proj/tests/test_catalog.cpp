#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "quivercount/catalog.hpp"
#include "quivercount/errors.hpp"

using namespace quivercount;

namespace {

Quiver relabel(const Quiver& q, const std::vector<std::size_t>& perm) {
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({perm[a.tail], perm[a.head]});
  return Quiver(q.vertex_count(), arrows);
}

std::multiset<Arrow> arrow_set(const Quiver& q) { return {q.arrows().begin(), q.arrows().end()}; }

std::uint64_t brute_aut(const Quiver& q) {
  std::vector<std::size_t> perm(q.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  const auto base = arrow_set(q);
  std::uint64_t count = 0;
  do {
    count += arrow_set(relabel(q, perm)) == base;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Proper colorings of the conflict graph using colors 0..g-1, by exhaustion.
std::uint64_t brute_colorings(const Quiver& q, unsigned g, bool surjective) {
  const std::size_t n = q.arrow_count();
  std::vector<unsigned> color(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (std::size_t a = 0; a < n && proper; ++a) {
      for (std::size_t b = a + 1; b < n && proper; ++b) {
        const bool adjacent = q.arrow(a).tail == q.arrow(b).tail || q.arrow(a).head == q.arrow(b).head;
        proper = !(adjacent && color[a] == color[b]);
      }
    }
    if (proper && surjective) {
      std::set<unsigned> used(color.begin(), color.end());
      proper = used.size() == g;
    }
    count += proper;
    std::size_t i = 0;
    while (i < n && ++color[i] == g) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST(Catalog, CountsMatchLabeledOrbitCensus) {
  for (unsigned d = 1; d <= 7; ++d) {
    const auto entries = enumerate_tree_quivers(d);
    const auto census = labeled_orbit_census(d);
    EXPECT_EQ(entries.size(), census.class_count()) << d;
    const Integer labeled = power(Integer(2), d - 1) * power(Integer(d), d >= 2 ? d - 2 : 0);
    EXPECT_EQ(census.labeled_count, labeled.get_ui());
  }
  EXPECT_EQ(enumerate_tree_quivers(3).size(), 3u);
  EXPECT_EQ(enumerate_tree_quivers(5).size(), 27u);
}

TEST(Catalog, EntriesAreDistinctSortedTrees) {
  for (unsigned d = 1; d <= 6; ++d) {
    const auto entries = enumerate_tree_quivers(d);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_TRUE(entries[i].quiver.is_tree());
      EXPECT_EQ(entries[i].vertex_count(), d);
      EXPECT_EQ(canonical_code(entries[i].quiver), entries[i].canonical_code);
      if (i) EXPECT_LT(entries[i - 1].canonical_code, entries[i].canonical_code);
    }
  }
}

TEST(Catalog, CanonicalCodeInvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (const auto& e : enumerate_tree_quivers(6)) {
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto q = relabel(e.quiver, perm);
      EXPECT_EQ(canonical_code(q), e.canonical_code);
      EXPECT_EQ(arrow_set(canonicalize(q).relabeled), arrow_set(e.quiver));
    }
  }
}

TEST(Catalog, AutomorphismOrdersMatchPermutationSearch) {
  for (unsigned d = 1; d <= 6; ++d) {
    for (const auto& e : enumerate_tree_quivers(d)) EXPECT_EQ(e.aut_order, brute_aut(e.quiver)) << e.quiver.to_string();
  }
  const auto three = enumerate_tree_quivers(3);
  std::vector<std::uint64_t> auts;
  for (const auto& e : three) auts.push_back(e.aut_order);
  std::sort(auts.begin(), auts.end());
  EXPECT_EQ(auts, (std::vector<std::uint64_t>{1, 2, 2}));
}

TEST(Catalog, CayleyIdentity) {
  for (unsigned d = 1; d <= 8; ++d) {
    const auto c = cayley_identity_check(d);
    EXPECT_EQ(c.lhs, c.rhs) << d;
  }
  EXPECT_EQ(cayley_identity_check(4).lhs, 8 * 16);
}

TEST(Catalog, ChromaticPolynomialMatchesColorings) {
  for (unsigned d = 2; d <= 6; ++d) {
    for (const auto& e : enumerate_tree_quivers(d)) {
      const auto chi = chromatic_polynomial(conflict_graph(e.quiver));
      for (unsigned g = 1; g <= (d <= 5 ? 4u : 3u); ++g) {
        EXPECT_EQ(chi(Rational(g)), brute_colorings(e.quiver, g, false)) << e.quiver.to_string() << " g=" << g;
      }
    }
  }
}

TEST(Catalog, WindingCountsMatchSurjectiveColorings) {
  for (unsigned d = 2; d <= 5; ++d) {
    for (const auto& e : enumerate_tree_quivers(d)) {
      ASSERT_EQ(e.winding_counts.size(), d - 1);
      for (unsigned k = 1; k <= d - 1; ++k) {
        EXPECT_EQ(e.winding_counts[k - 1], brute_colorings(e.quiver, k, true)) << e.quiver.to_string();
      }
      EXPECT_EQ(e.winding_counts.back(), factorial(d - 1));
    }
  }
}

TEST(Catalog, OrbitPolynomialsOfThreeVertexTrees) {
  for (const auto& e : enumerate_tree_quivers(3)) {
    const auto p = orbit_count_poly(e);
    if (e.aut_order == 1) {
      EXPECT_EQ(p, (BinomialPolyG{{1, 1}, {2, 2}}));
    } else {
      EXPECT_EQ(p, (BinomialPolyG{{2, 1}}));
    }
  }
  EXPECT_EQ(orbit_count_poly(enumerate_tree_quivers(1).front()), (BinomialPolyG{{0, 1}}));
  EXPECT_EQ(orbit_count_poly(enumerate_tree_quivers(2).front()), (BinomialPolyG{{1, 1}}));
}

TEST(Catalog, Errors) {
  EXPECT_THROW(enumerate_tree_quivers(0), InputError);
  EXPECT_THROW(enumerate_tree_quivers(9), ResourceError);
  EXPECT_NO_THROW(enumerate_tree_quivers(9, 9));
  EXPECT_THROW(canonicalize(parse_quiver("3:0>1,1>0,1>2")), InputError);
  EXPECT_THROW(labeled_orbit_census(8), ResourceError);
}

TEST(Catalog, PrueferDecode) {
  const auto edges = pruefer_decode({3, 3, 3});
  EXPECT_EQ(edges.size(), 4u);
  for (const auto& [a, b] : edges) EXPECT_TRUE(a == 3 || b == 3);
}
