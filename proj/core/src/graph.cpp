#include "mvd/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "mvd/errors.hpp"

namespace mvd {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty vertex label");
    if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
  }
  rows_.assign(labels_.size(), VertexSet(labels_.size()));
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges) : Graph(std::move(labels)) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[u].members())
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at '" + labels_[u] + "'");
  if (rows_[u].contains(v)) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!rows_[u].contains(v)) return;
  rows_[u].erase(v);
  rows_[v].erase(u);
  --edge_count_;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) throw InputError("vertex index " + std::to_string(v) + " out of range");
}

std::vector<std::string> letter_labels(std::size_t n) {
  if (n > 26) return indexed_labels(n);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::vector<std::string> indexed_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

Graph reorder(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.order()) throw InputError("reorder: permutation size mismatch");
  return induced_subgraph(g, order);
}

VertexSet reachable_from(const Graph& g, Vertex start, const VertexSet& blocked) {
  VertexSet seen(g.order());
  if (blocked.contains(start)) throw InputError("reachable_from: start vertex is blocked");
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen.contains(w) || blocked.contains(w)) continue;
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable_from(g, 0, VertexSet(g.order())).size() == g.order();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet covered(g.order());
  const VertexSet none(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (covered.contains(v)) continue;
    out.push_back(reachable_from(g, v, none));
    covered |= out.back();
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("induced_subgraph: vertex set belongs to another graph");
  if (s.empty()) throw InputError("induced_subgraph: empty vertex set");
  auto members = s.members();
  return induced_subgraph(g, members);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::string> labels;
  labels.reserve(order.size());
  std::vector<std::size_t> position(g.order(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v >= g.order()) throw InputError("induced_subgraph: vertex " + std::to_string(v) + " not in graph");
    if (position[v] != order.size()) throw InputError("induced_subgraph: repeated vertex '" + g.label(v) + "'");
    position[v] = i;
    labels.push_back(g.label(v));
  }
  Graph sub(std::move(labels));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      std::size_t j = position[w];
      if (j != order.size() && i < j) sub.add_edge(i, j);
    }
  }
  return sub;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("remove_vertices: vertex set belongs to another graph");
  auto keep = s.complement();
  if (keep.empty()) throw InputError("remove_vertices: cannot remove every vertex");
  return induced_subgraph(g, keep);
}

bool separates(const Graph& g, const VertexSet& s, Vertex x, Vertex y) {
  if (x >= g.order() || y >= g.order()) throw InputError("separates: vertex not in graph");
  if (x == y) throw InputError("separates: x and y must differ");
  if (s.contains(x) || s.contains(y)) throw InputError("separates: x and y must lie outside the cut");
  return !reachable_from(g, x, s).contains(y);
}

namespace {

// Calls visit(subset) for every subset of {0..n-1} with exactly `size`
// members until visit returns true.
template <typename Visit>
bool any_subset_of_size(std::size_t n, std::size_t size, Visit&& visit) {
  std::vector<Vertex> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    if (visit(std::span<const Vertex>(pick))) return true;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool is_k_connected(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k == 0) return true;
  if (n <= k) return false;
  for (std::size_t size = 0; size < k; ++size) {
    bool disconnects = any_subset_of_size(n, size, [&](std::span<const Vertex> pick) {
      VertexSet removed(n, pick);
      auto rest = removed.complement().members();
      return reachable_from(g, rest.front(), removed).size() != rest.size();
    });
    if (disconnects) return false;
  }
  return true;
}

}  // namespace mvd
