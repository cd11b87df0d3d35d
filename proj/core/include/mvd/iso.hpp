#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvd/coloring.hpp"
#include "mvd/graph.hpp"

namespace mvd {

/// Bijection V(G) -> V(H); image[v] is the vertex of H that v maps to.
struct IsoMapping {
  std::vector<Vertex> image;

  Vertex operator()(Vertex v) const { return image.at(v); }
  std::size_t size() const noexcept { return image.size(); }
  friend bool operator==(const IsoMapping&, const IsoMapping&) = default;
};

/// True iff m is a bijection with uv in E(G) <=> m(u)m(v) in E(H).
bool is_isomorphism(const Graph& g, const Graph& h, const IsoMapping& m);

/// Complete backtracking search. Vertices of g are matched in index order and
/// candidates tried in ascending order, so the mapping returned is the
/// lexicographically least one. Absence means the graphs are not isomorphic.
std::optional<IsoMapping> find_isomorphism(const Graph& g, const Graph& h);

/// Pulls a coloring of H back to G: color(v) = source(m(v)).
VertexColoring transfer_coloring(const IsoMapping& m, const VertexColoring& source);

inline constexpr std::size_t kCanonicalOrderLimit = 12;

/// Vertex order that minimizes the adjacency string, found by
/// individualization/refinement over the degree partition. order[i] is the
/// vertex placed at position i.
std::vector<Vertex> canonical_order(const Graph& g);

/// Text key equal for two graphs iff they are isomorphic. Throws GuardError
/// above kCanonicalOrderLimit vertices.
std::string canonical_form(const Graph& g);

}  // namespace mvd
