#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvd/graph.hpp"

namespace mvd {

/// Per-vertex state left behind by the low-link depth-first search.
struct DfsRecord {
  std::size_t dfs_number = 0;  // discovery index, 1 for the root; 0 = unvisited
  std::size_t low = 0;
  std::optional<Vertex> parent;
};

struct DfsTable {
  Vertex root = 0;
  std::vector<DfsRecord> records;
};

/// Iterative DFS from root, neighbors in ascending index order, recording
/// discovery numbers, low-links and tree parents.
DfsTable lowlink_search(const Graph& g, Vertex root = 0);

/// Cut-vertex test from a completed search: the root is a cut vertex iff it
/// has at least two tree children; any other v iff some tree child w has
/// low(w) >= dfs(v).
bool is_cut_vertex_by_lowlink(const DfsTable& table, Vertex v);

enum class BlockKind { trivial, nontrivial };

struct Block {
  /// Vertices of the block in discovery order.
  std::vector<Vertex> vertices;
  /// Induced subgraph; its vertex i is vertices[i].
  Graph subgraph;
  BlockKind kind = BlockKind::nontrivial;

  std::size_t order() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const;
  /// Labels sorted ascending, for set comparisons and reports.
  std::vector<std::string> sorted_labels() const;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet cut_vertices;

  std::size_t block_count() const noexcept { return blocks.size(); }
  std::size_t trivial_count() const noexcept;
};

/// Splits a connected graph with at least two vertices into its blocks.
/// Root is vertex 0 and neighbors are explored in ascending order, so the
/// output is deterministic. Throws InputError on trivial or disconnected
/// input.
BlockDecomposition decompose(const Graph& g);

/// Reference implementation: v is a cut vertex iff G - v is disconnected.
VertexSet naive_cut_vertices(const Graph& g);

}  // namespace mvd
