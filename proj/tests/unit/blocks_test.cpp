#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mvd/blocks.hpp"
#include "mvd/errors.hpp"
#include "mvd/families.hpp"
#include "mvd/graph_io.hpp"
#include "oracles.hpp"

using namespace mvd;

namespace {

Graph example() {
  return parse_matrix_graph(read_text_file(std::string(MVD_TEST_DATA_DIR) + "/two_block_17.txt")).graph;
}

std::set<std::vector<std::string>> block_sets(const BlockDecomposition& dec) {
  std::set<std::vector<std::string>> out;
  for (const auto& b : dec.blocks) out.insert(b.sorted_labels());
  return out;
}

void check_invariants(const Graph& g, const BlockDecomposition& dec) {
  // every edge in exactly one block
  std::map<Edge, int> seen;
  std::size_t total = 0;
  for (const auto& b : dec.blocks) {
    total += b.order();
    for (auto [u, v] : b.subgraph.edges()) {
      auto a = b.vertices[u], c = b.vertices[v];
      ++seen[{std::min(a, c), std::max(a, c)}];
    }
    if (b.kind == BlockKind::trivial) {
      EXPECT_EQ(b.order(), 2u);
      EXPECT_EQ(b.subgraph.size(), 1u);
    } else {
      EXPECT_TRUE(is_k_connected(b.subgraph, 2));
    }
  }
  EXPECT_EQ(seen.size(), g.size());
  for (const auto& [e, count] : seen) {
    EXPECT_TRUE(g.adjacent(e.first, e.second));
    EXPECT_EQ(count, 1);
  }
  EXPECT_EQ(total - dec.block_count() + 1, g.order());

  std::vector<int> membership(g.order(), 0);
  for (const auto& b : dec.blocks)
    for (Vertex v : b.vertices) ++membership[v];
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(membership[v] >= 2, dec.cut_vertices.contains(v));

  for (std::size_t i = 0; i < dec.block_count(); ++i) {
    for (std::size_t j = i + 1; j < dec.block_count(); ++j) {
      std::size_t shared = 0;
      for (Vertex v : dec.blocks[i].vertices) {
        if (dec.blocks[j].contains(v)) {
          ++shared;
          EXPECT_TRUE(dec.cut_vertices.contains(v));
        }
      }
      EXPECT_LE(shared, 1u);
    }
  }
}

}  // namespace

TEST(Decompose, ExampleGraph) {
  const auto g = example();
  const auto dec = decompose(g);
  EXPECT_EQ(dec.cut_vertices.members(), (std::vector<Vertex>{*g.find("H")}));
  std::set<std::vector<std::string>> expected{{"B", "C", "D", "H", "I", "L", "M", "O", "Q"},
                                              {"A", "E", "F", "G", "H", "J", "K", "N", "P"}};
  EXPECT_EQ(block_sets(dec), expected);
  for (const auto& b : dec.blocks) {
    if (b.contains(*g.find("B"))) EXPECT_EQ(b.subgraph.size(), 11u);
  }
  check_invariants(g, dec);
}

TEST(Decompose, CycleAndPath) {
  auto c5 = decompose(cycle_graph(5));
  EXPECT_EQ(c5.block_count(), 1u);
  EXPECT_TRUE(c5.cut_vertices.empty());
  EXPECT_EQ(c5.blocks[0].kind, BlockKind::nontrivial);

  auto p4 = decompose(path_graph(4));
  EXPECT_EQ(p4.block_count(), 3u);
  EXPECT_EQ(p4.trivial_count(), 3u);
  EXPECT_EQ(p4.cut_vertices.members(), (std::vector<Vertex>{1, 2}));
}

TEST(Decompose, RejectsBadInput) {
  EXPECT_THROW(decompose(Graph({"a"})), InputError);
  Graph g({"a", "b", "c"});
  g.add_edge(0, 1);
  EXPECT_THROW(decompose(g), InputError);
}

TEST(Decompose, LongPathDoesNotOverflow) {
  auto dec = decompose(path_graph(20000));
  EXPECT_EQ(dec.block_count(), 19999u);
  EXPECT_EQ(dec.cut_vertices.size(), 19998u);
}

TEST(Decompose, DiscoveryOrderIsDeterministic) {
  auto g = example();
  EXPECT_EQ(decompose(g).blocks[0].vertices, decompose(g).blocks[0].vertices);
}

TEST(Lowlink, CutVertexTest) {
  const auto g = example();
  const auto table = lowlink_search(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_EQ(is_cut_vertex_by_lowlink(table, v), g.label(v) == "H");
    const auto& r = table.records[v];
    EXPECT_LE(r.low, r.dfs_number);
    EXPECT_EQ(r.parent.has_value(), v != table.root);
  }
  const auto c6 = lowlink_search(cycle_graph(6));
  for (Vertex v = 0; v < 6; ++v) EXPECT_FALSE(is_cut_vertex_by_lowlink(c6, v));
  const auto star = star_graph(3);
  for (Vertex root = 0; root < 4; ++root) {
    const auto t = lowlink_search(star, root);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(is_cut_vertex_by_lowlink(t, v), v == 0);
  }
}

TEST(NaiveCutVertices, Basics) {
  EXPECT_EQ(naive_cut_vertices(example()).size(), 1u);
  EXPECT_TRUE(naive_cut_vertices(cycle_graph(7)).empty());
  EXPECT_EQ(naive_cut_vertices(path_graph(5)).members(), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Decompose, AgreesWithOracleOnRandomGraphs) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 3 + i % 6;
    const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    auto g = oracle::random_connected(n, p, rng);
    const auto dec = decompose(g);
    const auto expected = oracle::cut_vertices(oracle::matrix_of(g));
    ASSERT_EQ(dec.cut_vertices.members(), expected);
    ASSERT_EQ(naive_cut_vertices(g).members(), expected);
    const auto table = lowlink_search(g);
    for (Vertex v = 0; v < n; ++v)
      ASSERT_EQ(is_cut_vertex_by_lowlink(table, v), dec.cut_vertices.contains(v));
    check_invariants(g, dec);
  }
}
