#include "mvd/verify.hpp"

#include <algorithm>

#include "mvd/errors.hpp"

namespace mvd {
namespace {

void check_total(const Graph& g, const VertexColoring& c) {
  if (c.size() != g.order())
    throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
}

// Nonadjacent pairs (x, y) with label(x) < label(y), in label order.
std::vector<Edge> nonadjacent_pairs_by_label(const Graph& g) {
  std::vector<Vertex> by_label(g.order());
  for (Vertex v = 0; v < g.order(); ++v) by_label[v] = v;
  std::sort(by_label.begin(), by_label.end(), [&](Vertex a, Vertex b) { return g.label(a) < g.label(b); });
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < by_label.size(); ++i)
    for (std::size_t j = i + 1; j < by_label.size(); ++j)
      if (!g.adjacent(by_label[i], by_label[j])) pairs.emplace_back(by_label[i], by_label[j]);
  return pairs;
}

std::optional<Color> first_separating_color(const Graph& g, const std::vector<Color>& palette,
                                            const std::vector<VertexSet>& classes, Vertex x, Vertex y) {
  for (std::size_t i = 0; i < palette.size(); ++i) {
    VertexSet cut = classes[i];
    cut.erase(x);
    cut.erase(y);
    if (cut.empty()) continue;
    if (!reachable_from(g, x, cut).contains(y)) return palette[i];
  }
  return std::nullopt;
}

}  // namespace

std::optional<Color> monochromatic_cut_exists(const Graph& g, const VertexColoring& c, Vertex x, Vertex y) {
  check_total(g, c);
  if (x >= g.order() || y >= g.order()) throw InputError("vertex not in graph");
  if (x == y) throw InputError("monochromatic cut: x and y must differ");
  if (g.adjacent(x, y))
    throw InputError("monochromatic cut: '" + g.label(x) + "' and '" + g.label(y) + "' are adjacent");
  auto palette = c.palette();
  std::vector<VertexSet> classes;
  for (Color k : palette) classes.push_back(c.color_class(k));
  return first_separating_color(g, palette, classes, x, y);
}

MvdVerdict is_mvd_coloring(const Graph& g, const VertexColoring& c) {
  check_total(g, c);
  auto palette = c.palette();
  std::vector<VertexSet> classes;
  for (Color k : palette) classes.push_back(c.color_class(k));

  MvdVerdict verdict;
  for (auto [x, y] : nonadjacent_pairs_by_label(g)) {
    auto color = first_separating_color(g, palette, classes, x, y);
    if (!color) {
      verdict.ok = false;
      verdict.witness = Edge{x, y};
      verdict.certificate.clear();
      return verdict;
    }
    verdict.certificate.push_back({x, y, *color});
  }
  verdict.ok = true;
  return verdict;
}

VertexColoring restrict_coloring(const VertexColoring& c, const VertexSet& s) {
  if (s.universe() != c.size()) throw InputError("restrict: vertex set belongs to another graph");
  auto members = s.members();
  return restrict_coloring(c, members);
}

VertexColoring restrict_coloring(const VertexColoring& c, std::span<const Vertex> order) {
  std::vector<Color> out;
  out.reserve(order.size());
  for (Vertex v : order) {
    if (v >= c.size()) throw InputError("restrict: vertex " + std::to_string(v) + " not colored");
    out.push_back(c[v]);
  }
  return VertexColoring(std::move(out));
}

}  // namespace mvd
