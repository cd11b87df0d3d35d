#include "mvd/families.hpp"

#include "mvd/errors.hpp"

namespace mvd {

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle_graph: need at least 3 vertices");
  Graph g(indexed_labels(n));
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path_graph: need at least 1 vertex");
  Graph g(indexed_labels(n));
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(indexed_labels(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(indexed_labels(leaves + 1));
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(indexed_labels(a + b));
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace mvd
