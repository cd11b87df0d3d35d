#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvd/vertex_set.hpp"

namespace mvd {

using Edge = std::pair<Vertex, Vertex>;

/// Labeled simple undirected graph. Vertex identity is the index; labels are
/// for presentation and must be pairwise distinct and non-empty.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find, but throws InputError for an unknown label.
  Vertex index_of(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  const VertexSet& neighborhood(Vertex v) const { return rows_.at(v); }
  std::vector<Vertex> neighbors(Vertex v) const { return rows_.at(v).members(); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

  VertexSet vertices() const { return VertexSet::all(order()); }
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool is_complete() const noexcept { return 2 * edge_count_ == order() * (order() - 1); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// "a", "b", ..., "z" for n <= 26, otherwise "v1", ..., "vn".
std::vector<std::string> letter_labels(std::size_t n);
/// "v1", ..., "vn".
std::vector<std::string> indexed_labels(std::size_t n);

/// Graph whose vertex i is vertex order[i] of g (labels travel with vertices).
Graph reorder(const Graph& g, std::span<const Vertex> order);

/// True iff every vertex is reachable from vertex 0. The empty graph counts
/// as connected.
bool is_connected(const Graph& g);

/// Vertices reachable from start without entering blocked. start itself must
/// not be blocked.
VertexSet reachable_from(const Graph& g, Vertex start, const VertexSet& blocked);

/// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// G[S]; vertices keep ascending index order and their labels.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// G[S] with vertex i of the result being order[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> order);

/// G - S. Throws InputError if S covers every vertex.
Graph remove_vertices(const Graph& g, const VertexSet& s);

/// True iff x and y lie in different components of G - S.
bool separates(const Graph& g, const VertexSet& s, Vertex x, Vertex y);

/// True iff |G| > k and no vertex set of size < k disconnects G, found by
/// exhaustive removal. Intended for small graphs.
bool is_k_connected(const Graph& g, std::size_t k);

}  // namespace mvd
