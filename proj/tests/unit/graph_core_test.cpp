#include <gtest/gtest.h>

#include <random>

#include "mvd/errors.hpp"
#include "mvd/families.hpp"
#include "mvd/graph.hpp"
#include "oracles.hpp"

using namespace mvd;

TEST(VertexSet, BasicOps) {
  VertexSet s(70, {1, 3, 69});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(69));
  EXPECT_FALSE(s.contains(2));
  EXPECT_FALSE(s.contains(500));
  s.erase(3);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 69}));
  EXPECT_EQ(s.complement().size(), 68u);
  VertexSet t(70, {1});
  EXPECT_TRUE(t.is_subset_of(s));
  EXPECT_TRUE(t.intersects(s));
  EXPECT_EQ((s - t).members(), (std::vector<Vertex>{69}));
  EXPECT_EQ((s & t), t);
  EXPECT_THROW(s.insert(70), InputError);
  EXPECT_EQ(VertexSet::all(65).size(), 65u);
  EXPECT_TRUE(VertexSet(0).empty());
}

TEST(Graph, RejectsBadLabelsAndLoops) {
  EXPECT_THROW(Graph({"a", "a"}), InputError);
  EXPECT_THROW(Graph({"a", ""}), InputError);
  Graph g({"a", "b"});
  EXPECT_THROW(g.add_edge(0, 0), InputError);
  EXPECT_THROW(g.add_edge(0, 2), InputError);
  EXPECT_THROW(g.index_of("z"), InputError);
}

TEST(Graph, EdgesAndDegrees) {
  auto g = cycle_graph(5);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2u);
  g.add_edge(0, 1);  // already there
  EXPECT_EQ(g.size(), 5u);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_FALSE(g.adjacent(1, 0));
  EXPECT_TRUE(complete_graph(5).is_complete());
  EXPECT_FALSE(cycle_graph(4).is_complete());
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6u);
  EXPECT_EQ(star_graph(4).degree(0), 4u);
}

TEST(Graph, IsConnected) {
  EXPECT_TRUE(is_connected(cycle_graph(5)));
  Graph two({"a", "b", "c", "d"});
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(components(two).size(), 2u);
  EXPECT_TRUE(is_connected(Graph{}));
}

TEST(Graph, InducedSubgraphAndRemoval) {
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(induced_subgraph(c5, c5.vertices()), c5);

  const auto k4 = complete_graph(4);
  auto k3 = induced_subgraph(k4, VertexSet(4, {0, 2, 3}));
  EXPECT_TRUE(k3.is_complete());
  EXPECT_EQ(k3.labels(), (std::vector<std::string>{"v1", "v3", "v4"}));

  auto p3 = remove_vertices(cycle_graph(4), VertexSet(4, {0}));
  EXPECT_EQ(p3.order(), 3u);
  EXPECT_EQ(p3.size(), 2u);
  EXPECT_TRUE(is_connected(p3));

  auto split = remove_vertices(c5, VertexSet(5, {1, 4}));
  EXPECT_FALSE(is_connected(split));
  EXPECT_EQ(split.size(), 1u);

  EXPECT_TRUE(remove_vertices(complete_graph(5), VertexSet(5, {1, 3})).is_complete());
  EXPECT_THROW(remove_vertices(c5, c5.vertices()), InputError);
}

TEST(Graph, Separates) {
  const auto c4 = cycle_graph(4);
  EXPECT_TRUE(separates(c4, VertexSet(4, {1, 3}), 0, 2));
  EXPECT_FALSE(separates(c4, VertexSet(4, {1}), 0, 2));
  EXPECT_FALSE(separates(c4, VertexSet(4, {2}), 0, 1));
  EXPECT_THROW(separates(c4, VertexSet(4, {0}), 0, 2), InputError);
  EXPECT_THROW(separates(c4, VertexSet(4), 1, 1), InputError);
}

TEST(Graph, SeparatesMatchesReachabilityOracle) {
  std::mt19937 rng(11);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + round % 5;
    auto g = oracle::random_connected(n, 0.3, rng);
    const auto a = oracle::matrix_of(g);
    for (unsigned s = 0; s < (1U << n); ++s) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          if ((s >> x & 1U) || (s >> y & 1U)) continue;
          VertexSet set(n);
          for (Vertex v = 0; v < n; ++v)
            if (s >> v & 1U) set.insert(v);
          ASSERT_EQ(separates(g, set, x, y), oracle::separated(a, s, x, y));
        }
      }
    }
  }
}

TEST(Graph, KConnectivity) {
  EXPECT_TRUE(is_k_connected(cycle_graph(5), 2));
  EXPECT_FALSE(is_k_connected(path_graph(4), 2));
  EXPECT_TRUE(is_k_connected(complete_graph(4), 3));
  EXPECT_FALSE(is_k_connected(complete_graph(4), 4));
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_connected(2 + i % 7, 0.2, rng);
    g.remove_edge(0, 1);
    EXPECT_EQ(is_k_connected(g, 1), is_connected(g));
    EXPECT_EQ(is_k_connected(g, 2), oracle::two_connected(oracle::matrix_of(g)));
  }
}

TEST(Graph, Reorder) {
  auto g = path_graph(3);
  std::vector<Vertex> order{2, 0, 1};
  auto h = reorder(g, order);
  EXPECT_EQ(h.label(0), "v3");
  EXPECT_TRUE(h.adjacent(0, 2));
  EXPECT_TRUE(h.adjacent(2, 1));
  EXPECT_FALSE(h.adjacent(0, 1));
}
