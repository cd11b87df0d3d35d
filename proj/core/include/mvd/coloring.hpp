#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mvd/vertex_set.hpp"

namespace mvd {

/// Positive color identifier. 0 is never a valid color.
using Color = std::uint32_t;

/// Total map from the vertices 0..n-1 of some graph to positive colors.
class VertexColoring {
 public:
  VertexColoring() = default;
  explicit VertexColoring(std::vector<Color> colors);

  static VertexColoring uniform(std::size_t n, Color c = 1);
  /// Vertex i gets color i + 1.
  static VertexColoring distinct(std::size_t n);

  std::size_t size() const noexcept { return colors_.size(); }
  Color color(Vertex v) const { return colors_.at(v); }
  Color operator[](Vertex v) const { return colors_[v]; }
  void set(Vertex v, Color c);
  std::span<const Color> colors() const noexcept { return colors_; }

  /// |tau(G)|: number of distinct colors used.
  std::size_t distinct_count() const;
  /// Used colors, ascending.
  std::vector<Color> palette() const;
  VertexSet color_class(Color c) const;

  /// Same partition, colors renamed 1..k in order of first appearance.
  VertexColoring renumbered() const;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

 private:
  std::vector<Color> colors_;
};

/// True iff both colorings induce the same partition of the vertices.
bool same_partition(const VertexColoring& a, const VertexColoring& b);

}  // namespace mvd
