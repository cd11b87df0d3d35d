#include "mvd/coloring.hpp"

#include <algorithm>
#include <unordered_map>

#include "mvd/errors.hpp"

namespace mvd {

VertexColoring::VertexColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] == 0) throw InputError("color 0 assigned to vertex " + std::to_string(v) + "; colors are positive");
}

VertexColoring VertexColoring::uniform(std::size_t n, Color c) { return VertexColoring(std::vector<Color>(n, c)); }

VertexColoring VertexColoring::distinct(std::size_t n) {
  std::vector<Color> colors(n);
  for (std::size_t v = 0; v < n; ++v) colors[v] = static_cast<Color>(v + 1);
  return VertexColoring(std::move(colors));
}

void VertexColoring::set(Vertex v, Color c) {
  if (c == 0) throw InputError("color 0 is not a valid color");
  colors_.at(v) = c;
}

std::size_t VertexColoring::distinct_count() const { return palette().size(); }

std::vector<Color> VertexColoring::palette() const {
  std::vector<Color> out(colors_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet VertexColoring::color_class(Color c) const {
  VertexSet s(colors_.size());
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] == c) s.insert(v);
  return s;
}

VertexColoring VertexColoring::renumbered() const {
  std::unordered_map<Color, Color> rename;
  std::vector<Color> out(colors_.size());
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    auto [it, fresh] = rename.try_emplace(colors_[v], static_cast<Color>(rename.size() + 1));
    out[v] = it->second;
  }
  return VertexColoring(std::move(out));
}

bool same_partition(const VertexColoring& a, const VertexColoring& b) {
  return a.size() == b.size() && a.renumbered() == b.renumbered();
}

}  // namespace mvd
