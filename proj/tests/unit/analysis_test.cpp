#include <gtest/gtest.h>

#include <random>

#include "mvd/analysis.hpp"
#include "mvd/blocks.hpp"
#include "mvd/catalog.hpp"
#include "mvd/errors.hpp"
#include "mvd/families.hpp"
#include "mvd/graph_io.hpp"
#include "mvd/iso.hpp"
#include "mvd/solve.hpp"
#include "oracles.hpp"

using namespace mvd;

namespace {

Graph with_pendants(Graph g, std::size_t count, std::mt19937& rng) {
  for (std::size_t i = 0; i < count; ++i) g = oracle::glue(g, path_graph(2), rng() % g.order(), 0);
  return oracle::shuffled(g, rng);
}

}  // namespace

TEST(HalfOrderBound, Examples) {
  auto c10 = bound_half_order(cycle_graph(10));
  EXPECT_TRUE(c10.applicable);
  EXPECT_EQ(c10.bound, 5u);
  EXPECT_EQ(mvd_exact(cycle_graph(10)).value, 5u);
  EXPECT_FALSE(bound_half_order(complete_graph(4)).applicable);
  auto k23 = bound_half_order(theta_graph("1,1,1"));
  EXPECT_TRUE(k23.applicable);
  EXPECT_EQ(k23.bound, 2u);
  EXPECT_EQ(mvd_exact(theta_graph("1,1,1")).value, 2u);
  EXPECT_FALSE(bound_half_order(cycle_graph(3)).applicable);
}

TEST(HalfOrderBound, HoldsOnTriangleFreeThetaGraphs) {
  // 2-connected triangle-free thetas with every path non-empty
  for (auto spec : {"1,1", "2,1,1", "3,2,1", "2,2,2", "1,1,1,1,1", "4,3", "3,3,1"}) {
    auto g = theta_graph(spec);
    ASSERT_TRUE(triangle_free(g));
    EXPECT_LE(mvd_exact(g, ExactOptions{false}).value, g.order() / 2) << spec;
  }
}

TEST(BlockBound, Examples) {
  std::mt19937 rng(1);
  auto tree = oracle::random_tree(8, rng);
  auto tb = bound_blocks(tree);
  EXPECT_TRUE(tb.applicable);
  EXPECT_EQ(tb.bound, 8u);

  auto two_c4 = oracle::glue(cycle_graph(4), cycle_graph(4), 0, 0);
  auto b = bound_blocks(two_c4);
  EXPECT_TRUE(b.applicable);
  EXPECT_EQ(b.bound, 3u);
  EXPECT_EQ(mvd_via_blocks(two_c4).value, 3u);

  auto c5 = bound_blocks(cycle_graph(5));
  EXPECT_EQ(c5.bound, 2u);
  EXPECT_EQ(mvd_exact(cycle_graph(5)).value, 2u);

  auto k4 = oracle::glue(complete_graph(4), path_graph(2), 0, 0);
  EXPECT_FALSE(bound_blocks(k4).applicable);
  EXPECT_FALSE(bound_blocks(cycle_graph(3)).applicable);
}

TEST(Classify, Examples) {
  std::mt19937 rng(3);
  // spider: three legs of length 2 and one of length 2 from a center
  Graph spider(indexed_labels(9));
  for (Vertex leg = 0; leg < 4; ++leg) {
    spider.add_edge(0, 1 + 2 * leg);
    spider.add_edge(1 + 2 * leg, 2 + 2 * leg);
  }
  auto s = classify(spider);
  EXPECT_EQ(s.regime, Regime::n);
  EXPECT_EQ(s.mvd, 9u);
  EXPECT_EQ(s.family, Family::tree);
  EXPECT_EQ(s.nontrivial_core.order(), 0u);

  auto uni = classify(with_pendants(cycle_graph(4), 3, rng));
  EXPECT_EQ(uni.order, 7u);
  EXPECT_EQ(uni.regime, Regime::n_minus_2);
  EXPECT_EQ(uni.family, Family::unicyclic_c4);

  auto a = classify(with_pendants(complete_bipartite(2, 3), 2, rng));
  EXPECT_EQ(a.regime, Regime::n_minus_3);
  EXPECT_EQ(a.family, Family::class_a);
  EXPECT_TRUE(find_isomorphism(a.nontrivial_core, complete_bipartite(2, 3)));
}

TEST(Classify, LargeMvdFamilies) {
  std::mt19937 rng(8);
  struct Case {
    Graph core;
    Regime regime;
    Family family;
  };
  const Graph c4 = cycle_graph(4);
  std::vector<Case> cases{
      {cycle_graph(5), Regime::n_minus_3, Family::class_a},
      {theta_graph("1,1,1"), Regime::n_minus_3, Family::class_a},
      {cycle_graph(6), Regime::n_minus_3, Family::class_a},
      {cycle_graph(7), Regime::n_minus_4, Family::class_b},
      {theta_graph("3,1,1"), Regime::n_minus_4, Family::class_b},
      {theta_graph("2,1,1"), Regime::n_minus_4, Family::class_b},
      {theta_graph("1,1,1,1"), Regime::n_minus_4, Family::class_b},
      {cycle_graph(8), Regime::n_minus_4, Family::class_b},
      {oracle::glue(c4, c4, 0, 0), Regime::n_minus_4, Family::class_b},
      {oracle::glue(oracle::glue(c4, path_graph(2), 0, 0), c4, 4, 0), Regime::n_minus_4, Family::class_b},
      {cycle_graph(9), Regime::n_minus_5, Family::class_c},
      {theta_graph("5,1,1"), Regime::n_minus_5, Family::class_c},
      {theta_graph("3,3,1"), Regime::n_minus_5, Family::class_c},
      {cycle_graph(10), Regime::n_minus_5, Family::class_c},
  };
  for (const auto& c : cases) {
    for (std::size_t pendants : {0, 1, 4}) {
      auto g = with_pendants(c.core, pendants, rng);
      auto r = classify(g);
      EXPECT_EQ(r.regime, c.regime) << write_edge_list(g);
      EXPECT_EQ(r.family, c.family) << write_edge_list(g);
    }
  }
}

TEST(Classify, GateFailures) {
  auto k4 = oracle::glue(complete_graph(4), path_graph(2), 0, 0);
  EXPECT_THROW(classify(k4), GateError);
  try {
    classify(cycle_graph(3));
    FAIL();
  } catch (const GateError& e) {
    EXPECT_NE(std::string(e.what()).find("triangle"), std::string::npos);
  }
  EXPECT_THROW(classify(k4), InputError);
}

TEST(Classify, RandomGatedGraphsRespectBoundAndSkipNMinusOne) {
  std::mt19937 rng(404);
  std::vector<Graph> pool;
  for (std::size_t n = 4; n <= 7; ++n)
    for (auto& b : generate_minimal_blocks(n)) pool.push_back(b);
  pool.push_back(path_graph(2));
  pool.push_back(path_graph(2));
  for (int i = 0; i < 220; ++i) {
    std::vector<Graph> parts;
    std::size_t n = 1;
    for (int tries = 0; tries < 6; ++tries) {
      const auto& b = pool[rng() % pool.size()];
      if (n + b.order() - 1 > 16) continue;
      parts.push_back(b);
      n += b.order() - 1;
    }
    auto g = oracle::assemble(parts, rng);
    auto bound = bound_blocks(g);
    ASSERT_TRUE(bound.applicable);
    auto value = mvd_via_blocks(g).value;
    EXPECT_LE(value, bound.bound);
    EXPECT_NE(value + 1, g.order());
    auto r = classify(g);
    EXPECT_EQ(r.mvd, value);
  }
}

TEST(TriangleBlocks, Values) {
  auto bowtie = oracle::glue(cycle_graph(3), cycle_graph(3), 0, 0);
  EXPECT_EQ(triangle_blocks_value(bowtie), 5u);
  auto friendship = oracle::glue(bowtie, cycle_graph(3), 0, 0);
  EXPECT_EQ(triangle_blocks_value(friendship), 7u);
  auto paw = oracle::glue(cycle_graph(3), path_graph(2), 0, 0);
  EXPECT_EQ(triangle_blocks_value(paw), 4u);
  EXPECT_FALSE(triangle_blocks_value(cycle_graph(4)));
  for (const auto& g : {bowtie, friendship, paw}) EXPECT_EQ(triangle_blocks_value(g), mvd_via_blocks(g).value);
  EXPECT_EQ(mvd_exact(friendship).value, 7u);
}

TEST(Names, Strings) {
  EXPECT_EQ(to_string(Regime::n_minus_2), "n-2");
  EXPECT_EQ(to_string(Family::unicyclic_c4), "unicyclic-C4");
  EXPECT_EQ(to_string(Family::class_c), "class-C");
}
