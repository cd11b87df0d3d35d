#include "mvd/blocks.hpp"

#include <algorithm>
#include <utility>

#include "mvd/errors.hpp"

namespace mvd {
namespace {

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

struct Frame {
  Vertex v;
  std::size_t next;  // index into adj[v] of the next edge to explore
};

// Low-link DFS. on_finish(v, records) runs when v is backtracked from, after low(v) is
// final and before low(parent(v)) absorbs it.
template <typename OnDiscover, typename OnFinish>
DfsTable run_search(const Graph& g, Vertex root, OnDiscover&& on_discover, OnFinish&& on_finish) {
  if (root >= g.order()) throw InputError("DFS root out of range");
  const auto adj = adjacency_lists(g);
  DfsTable table{root, std::vector<DfsRecord>(g.order())};
  auto& rec = table.records;

  std::size_t counter = 1;
  rec[root].dfs_number = rec[root].low = counter;
  on_discover(root);
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty()) {
    auto& top = stack.back();
    const Vertex v = top.v;
    if (top.next < adj[v].size()) {
      const Vertex w = adj[v][top.next++];
      if (rec[w].dfs_number == 0) {
        rec[w].parent = v;
        rec[w].dfs_number = rec[w].low = ++counter;
        on_discover(w);
        stack.push_back({w, 0});
      } else if (rec[v].parent != w) {
        rec[v].low = std::min(rec[v].low, rec[w].dfs_number);
      }
      continue;
    }
    stack.pop_back();
    on_finish(v, std::as_const(rec));
    if (rec[v].parent) {
      auto& p = rec[*rec[v].parent];
      p.low = std::min(p.low, rec[v].low);
    }
  }
  return table;
}

// G[order] using a caller-owned position table (all entries npos on entry and
// on return), so that many small blocks cost time linear in their size.
Graph block_subgraph(const Graph& g, const std::vector<std::vector<Vertex>>& adj,
                     const std::vector<Vertex>& order, std::vector<std::size_t>& position) {
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    labels.push_back(g.label(order[i]));
  }
  Graph sub(std::move(labels));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adj[order[i]]) {
      const std::size_t j = position[w];
      if (j != kUnplaced && i < j) sub.add_edge(i, j);
    }
  }
  for (Vertex v : order) position[v] = kUnplaced;
  return sub;
}

}  // namespace

DfsTable lowlink_search(const Graph& g, Vertex root) {
  return run_search(g, root, [](Vertex) {}, [](Vertex, const std::vector<DfsRecord>&) {});
}

bool is_cut_vertex_by_lowlink(const DfsTable& table, Vertex v) {
  const auto& rec = table.records;
  if (v >= rec.size()) throw InputError("vertex out of range");
  std::size_t children = 0;
  bool separating_child = false;
  for (Vertex w = 0; w < rec.size(); ++w) {
    if (rec[w].parent != v) continue;
    ++children;
    if (rec[w].low >= rec[v].dfs_number) separating_child = true;
  }
  if (v == table.root) return children >= 2;
  return separating_child;
}

bool Block::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

std::vector<std::string> Block::sorted_labels() const {
  std::vector<std::string> out = subgraph.labels();
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BlockDecomposition::trivial_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.kind == BlockKind::trivial; }));
}

BlockDecomposition decompose(const Graph& g) {
  if (g.order() < 2) throw InputError("block decomposition needs at least two vertices");
  if (!is_connected(g)) throw InputError("block decomposition needs a connected graph");

  BlockDecomposition dec;
  dec.cut_vertices = VertexSet(g.order());
  std::vector<Vertex> pending;  // discovered vertices not yet assigned to a block
  const auto adj = adjacency_lists(g);
  std::vector<std::size_t> position(g.order(), kUnplaced);
  std::size_t root_children = 0;
  const Vertex root = 0;

  auto on_finish = [&](Vertex v, const std::vector<DfsRecord>& rec) {
    if (!rec[v].parent) return;
    const Vertex p = *rec[v].parent;
    if (p == root) ++root_children;
    if (rec[v].low < rec[p].dfs_number) return;
    // p separates the subtree of v: pop down to and including v.
    Block block;
    while (true) {
      Vertex w = pending.back();
      pending.pop_back();
      block.vertices.push_back(w);
      if (w == v) break;
    }
    block.vertices.push_back(p);
    std::sort(block.vertices.begin(), block.vertices.end(),
              [&](Vertex a, Vertex b) { return rec[a].dfs_number < rec[b].dfs_number; });
    block.subgraph = block_subgraph(g, adj, block.vertices, position);
    block.kind = block.vertices.size() == 2 ? BlockKind::trivial : BlockKind::nontrivial;
    dec.blocks.push_back(std::move(block));
    if (p != root) dec.cut_vertices.insert(p);
  };
  run_search(g, root, [&](Vertex v) { pending.push_back(v); }, on_finish);
  if (root_children >= 2) dec.cut_vertices.insert(root);
  return dec;
}

VertexSet naive_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw InputError("naive_cut_vertices needs a connected graph");
  VertexSet out(g.order());
  if (g.order() < 3) return out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_connected(remove_vertices(g, VertexSet(g.order(), {v})))) out.insert(v);
  }
  return out;
}

}  // namespace mvd
