#pragma once

#include <cstddef>

#include "mvd/graph.hpp"

namespace mvd {

// Standard small graphs, labeled v1..vn in construction order.

/// C_n as v1 v2 ... vn v1. Requires n >= 3.
Graph cycle_graph(std::size_t n);
/// P_n: n vertices, n-1 edges. Requires n >= 1.
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,leaves}; the center is v1.
Graph star_graph(std::size_t leaves);
/// K_{a,b}; the first a vertices form one side.
Graph complete_bipartite(std::size_t a, std::size_t b);

}  // namespace mvd
