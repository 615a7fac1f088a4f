#include "gpends/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace gpends {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;
using testing::petersen;
using testing::star;

TEST(SimplicialGraphTest, RejectsLoopsAndUnknownEndpoints) {
  SimplicialGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 3), InputError);
  EXPECT_THROW(g.add_edge(-1, 0), InputError);
}

TEST(SimplicialGraphTest, RepeatedEdgeIsIgnored) {
  SimplicialGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(IsCompleteTest, Examples) {
  EXPECT_TRUE(is_complete(complete(3)));
  EXPECT_FALSE(is_complete(cycle(4)));
  EXPECT_TRUE(is_complete(SimplicialGraph(1)));
  EXPECT_TRUE(is_complete(SimplicialGraph(0)));
}

TEST(InducedSubgraphTest, Examples) {
  auto k2 = induced_subgraph(complete(3), {0, 2});
  EXPECT_EQ(k2.vertex_count(), 2);
  EXPECT_EQ(k2.edge_count(), 1);

  auto opposite = induced_subgraph(cycle(4), {0, 2});
  EXPECT_EQ(opposite.vertex_count(), 2);
  EXPECT_EQ(opposite.edge_count(), 0);

  auto outer = induced_subgraph(petersen(), {0, 1, 2, 3, 4});
  EXPECT_EQ(outer, cycle(5));

  EXPECT_THROW(induced_subgraph(cycle(4), {7}), InputError);
}

TEST(ConnectedComponentsTest, Examples) {
  auto comps = connected_components(SimplicialGraph(4));
  ASSERT_EQ(comps.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(comps[static_cast<std::size_t>(i)], VertexSet({i}));
  EXPECT_EQ(connected_components(cycle(4)).size(), 1u);
  EXPECT_TRUE(connected_components(SimplicialGraph(0)).empty());
}

TEST(ConnectedComponentsTest, OrderedBySmallestVertex) {
  SimplicialGraph g(5, {{3, 0}, {1, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], VertexSet({0, 3}));
  EXPECT_EQ(comps[1], VertexSet({1, 4}));
  EXPECT_EQ(comps[2], VertexSet({2}));
}

TEST(IsSeparatingTest, Examples) {
  EXPECT_TRUE(is_separating(path(3), {1}));
  EXPECT_TRUE(is_separating(SimplicialGraph(2), {}));
  for (int v = 0; v < 4; ++v) EXPECT_FALSE(is_separating(complete(4), {v}));
  EXPECT_THROW(is_separating(path(3), {5}), InputError);
}

TEST(UniversalVerticesTest, Examples) {
  EXPECT_EQ(universal_vertices(complete(3)), VertexSet({0, 1, 2}));
  EXPECT_TRUE(universal_vertices(cycle(4)).empty());
  EXPECT_EQ(universal_vertices(star(3)), VertexSet({0}));
}

TEST(LinkTest, Examples) {
  EXPECT_EQ(link(complete(3), 1), VertexSet({0, 2}));
  EXPECT_TRUE(link(SimplicialGraph(3), 0).empty());
  EXPECT_EQ(link(cycle(4), 0), VertexSet({1, 3}));
  EXPECT_THROW(link(cycle(4), 4), InputError);
}

TEST(InducedC4Test, Examples) {
  EXPECT_TRUE(has_induced_c4(cycle(4)));
  EXPECT_FALSE(has_induced_c4(complete(4)));
  EXPECT_FALSE(has_induced_c4(petersen()));
}

TEST(ChordalTest, Examples) {
  EXPECT_TRUE(is_chordal(path(6)));
  EXPECT_TRUE(is_chordal(star(4)));
  EXPECT_FALSE(is_chordal(cycle(5)));
  SimplicialGraph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  // Brute force: no induced cycle of length >= 4 in K4 minus an edge.
  EXPECT_FALSE(testing::brute_has_induced_cycle(diamond, 4, 4));
  EXPECT_TRUE(is_chordal(diamond));
  EXPECT_FALSE(is_chordal(petersen()));
}

TEST(CliqueSeparatorTest, Examples) {
  EXPECT_EQ(clique_separator_exists(path(3), VertexSet::range(3)), VertexSet({1}));
  EXPECT_EQ(testing::brute_clique_separators(cycle(4), VertexSet::range(4)).size(), 0u);
  EXPECT_FALSE(clique_separator_exists(cycle(4), VertexSet::range(4)).has_value());
  EXPECT_EQ(clique_separator_exists(SimplicialGraph(3), VertexSet{}), VertexSet{});
}

TEST(CliqueSeparatorTest, RespectsAllowedSet) {
  // Path 0-1-2-3: {1} and {2} both separate; only {2} is allowed.
  EXPECT_EQ(clique_separator_exists(path(4), {2, 3}), VertexSet({2}));
  EXPECT_EQ(clique_separator_exists(path(4), VertexSet::range(4)), VertexSet({1}));
  EXPECT_FALSE(clique_separator_exists(path(4), {0, 3}).has_value());
}

TEST(CliqueSeparatorTest, PrefersMinimalOverLexicographic) {
  // Triangle 0,1,2 with pendant 3 on 1 and 4 on 2: {1} separates 3, {2}
  // separates 4; {0,1} is separating but not minimal.
  SimplicialGraph g(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}});
  EXPECT_EQ(clique_separator_exists(g, {0, 1, 2}), VertexSet({1}));
  EXPECT_EQ(clique_separator_exists(g, {0, 2}), VertexSet({2}));
}

// Every graph with <= 5 vertices against every allowed set.
TEST(CliqueSeparatorTest, MatchesBruteForceExhaustively) {
  for (int n = 0; n <= 5; ++n) {
    const std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const auto g = testing::graph_from_mask(n, m);
      for (std::uint32_t a = 0; a < (1U << n); ++a) {
        const auto allowed = testing::mask_to_set(a);
        auto got = clique_separator_exists(g, allowed);
        auto want = testing::brute_preferred_separator(g, allowed);
        ASSERT_EQ(got, want) << "n=" << n << " mask=" << m << " allowed=" << a;
        if (got) {
          EXPECT_TRUE(is_clique(g, *got));
          EXPECT_TRUE(is_separating(g, *got));
          EXPECT_TRUE(got->is_subset_of(allowed));
        }
      }
    }
  }
}

TEST(CliqueSeparatorTest, MatchesBruteForceOnRandomLargerGraphs) {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 6 + iter % 7;  // up to 12 vertices
    const auto g = testing::random_graph(rng, n, 0.25 + 0.05 * (iter % 10));
    const auto all = g.vertices();
    ASSERT_EQ(clique_separator_exists(g, all), testing::brute_preferred_separator(g, all)) << "iter " << iter;
  }
}

TEST(GraphPropertyTest, UniversalVerticesMatchLinkSizes) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = iter % 9;
    const auto g = testing::random_graph(rng, n, 0.7);
    std::vector<Vertex> want;
    for (Vertex v = 0; v < n; ++v)
      if (static_cast<int>(link(g, v).size()) == n - 1) want.push_back(v);
    EXPECT_EQ(universal_vertices(g), VertexSet(want));
  }
}

TEST(GraphPropertyTest, SeparatingMatchesComponentCount) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + iter % 8;
    const auto g = testing::random_graph(rng, n, 0.35);
    const std::uint32_t s = static_cast<std::uint32_t>(rng()) & ((1U << n) - 1);
    const std::uint32_t rest = ((1U << n) - 1) & ~s;
    EXPECT_EQ(is_separating(g, testing::mask_to_set(s)), testing::mask_components(g, rest) >= 2);
  }
}

TEST(GraphPropertyTest, QueriesInvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + iter % 7;
    const auto g = testing::random_graph(rng, n, 0.45);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimplicialGraph h(n);
    for (auto [u, w] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(w)]);
    EXPECT_EQ(is_complete(g), is_complete(h));
    EXPECT_EQ(is_chordal(g), is_chordal(h));
    EXPECT_EQ(has_induced_c4(g), has_induced_c4(h));
    EXPECT_EQ(connected_components(g).size(), connected_components(h).size());
    EXPECT_EQ(universal_vertices(g).size(), universal_vertices(h).size());
    auto sg = clique_separator_exists(g, g.vertices());
    auto sh = clique_separator_exists(h, h.vertices());
    ASSERT_EQ(sg.has_value(), sh.has_value());
  }
}

}  // namespace
}  // namespace gpends
