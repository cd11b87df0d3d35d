#include "mvd/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mvd/errors.hpp"

namespace mvd {

bool is_isomorphism(const Graph& g, const Graph& h, const IsoMapping& m) {
  const std::size_t n = g.order();
  if (h.order() != n || m.size() != n || g.size() != h.size()) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : m.image) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(m.image[u], m.image[v])) return false;
  return true;
}

namespace {

// Degree plus the sorted degrees of the neighbors; equal for a vertex and its
// image under any isomorphism.
std::vector<std::vector<std::size_t>> signatures(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& sig = out[v];
    sig.push_back(g.degree(v));
    for (Vertex w : g.neighbors(v)) sig.push_back(g.degree(w));
    std::sort(sig.begin() + 1, sig.end());
  }
  return out;
}

}  // namespace

std::optional<IsoMapping> find_isomorphism(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  if (h.order() != n || g.size() != h.size()) return std::nullopt;
  const auto sig_g = signatures(g);
  const auto sig_h = signatures(h);
  {
    auto a = sig_g;
    auto b = sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<Vertex> image(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || sig_g[v] != sig_h[w]) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) consistent = g.adjacent(u, v) == h.adjacent(image[u], w);
      if (!consistent) continue;
      image[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return IsoMapping{std::move(image)};
}

VertexColoring transfer_coloring(const IsoMapping& m, const VertexColoring& source) {
  std::vector<Color> out(m.size());
  for (Vertex v = 0; v < m.size(); ++v) {
    if (m.image[v] >= source.size()) throw InputError("transfer: mapping leaves the colored graph");
    out[v] = source[m.image[v]];
  }
  return VertexColoring(std::move(out));
}

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits cells by the number of neighbors in every cell until stable. Cell
// order and split order depend only on structure, so the result commutes
// with relabeling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> cell_of(g.order());
    for (std::size_t c = 0; c < p.size(); ++c)
      for (Vertex v : p[c]) cell_of[v] = c;
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::size_t>, Cell> groups;
      for (Vertex v : cell) {
        std::vector<std::size_t> counts(p.size(), 0);
        for (Vertex w : g.neighbors(v)) ++counts[cell_of[w]];
        groups[counts].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [key, members] : groups) next.push_back(std::move(members));
    }
    p = std::move(next);
  }
}

std::string adjacency_bits(const Graph& g, const std::vector<Vertex>& order) {
  std::string bits;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) bits += g.adjacent(order[i], order[j]) ? '1' : '0';
  return bits;
}

bool twins(const Graph& g, Vertex u, Vertex w) {
  auto a = g.neighborhood(u);
  auto b = g.neighborhood(w);
  a.erase(w);
  b.erase(u);
  return a == b;
}

struct Best {
  std::string bits;
  std::vector<Vertex> order;
  bool found = false;
};

void search(const Graph& g, const Partition& p, Best& best) {
  auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
  if (target == p.end()) {
    std::vector<Vertex> order;
    for (const auto& cell : p) order.push_back(cell.front());
    auto bits = adjacency_bits(g, order);
    if (!best.found || bits < best.bits) best = {std::move(bits), std::move(order), true};
    return;
  }
  const auto t = static_cast<std::size_t>(target - p.begin());
  std::vector<Vertex> tried;
  for (Vertex v : p[t]) {
    if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
    tried.push_back(v);
    Partition child;
    child.reserve(p.size() + 1);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c != t) {
        child.push_back(p[c]);
        continue;
      }
      child.push_back({v});
      Cell rest;
      for (Vertex w : p[c])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
    }
    refine(g, child);
    search(g, child, best);
  }
}

}  // namespace

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() > kCanonicalOrderLimit)
    throw GuardError("canonical form is limited to " + std::to_string(kCanonicalOrderLimit) + " vertices, got " +
                     std::to_string(g.order()));
  if (g.order() == 0) return {};
  Partition p{Cell{}};
  for (Vertex v = 0; v < g.order(); ++v) p.front().push_back(v);
  refine(g, p);
  Best best;
  search(g, p, best);
  return best.order;
}

std::string canonical_form(const Graph& g) {
  auto order = canonical_order(g);
  auto bits = adjacency_bits(g, order);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string key = std::to_string(g.order()) + ":";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) nibble = nibble << 1 | (i + j < bits.size() && bits[i + j] == '1' ? 1U : 0U);
    key += kHex[nibble];
  }
  return key;
}

}  // namespace mvd
