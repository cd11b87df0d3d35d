#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mvd/coloring.hpp"
#include "mvd/graph.hpp"

namespace mvd {

/// One nonadjacent pair together with a color whose class separates it.
struct PairCertificate {
  Vertex x = 0;
  Vertex y = 0;
  Color color = 0;
};

struct MvdVerdict {
  bool ok = false;
  /// Least failing pair (by label), present iff !ok.
  std::optional<Edge> witness;
  /// One entry per nonadjacent pair, in label order, when ok.
  std::vector<PairCertificate> certificate;
};

/// Searches for a monochromatic x-y vertex cut. Such a cut exists iff some
/// whole color class, minus {x, y}, separates x from y; the smallest such
/// color is returned. Throws InputError if x and y are equal or adjacent.
std::optional<Color> monochromatic_cut_exists(const Graph& g, const VertexColoring& c,
                                              Vertex x, Vertex y);

/// Checks that every nonadjacent pair has a monochromatic cut. Pairs are
/// scanned in label order, so the reported witness is the least failing one.
/// Complete graphs pass with any coloring.
MvdVerdict is_mvd_coloring(const Graph& g, const VertexColoring& c);

/// Restriction of c to s, indexed like induced_subgraph(g, s). Colors are not
/// renumbered.
VertexColoring restrict_coloring(const VertexColoring& c, const VertexSet& s);
VertexColoring restrict_coloring(const VertexColoring& c, std::span<const Vertex> order);

}  // namespace mvd
