#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mvd/catalog.hpp"
#include "mvd/coloring.hpp"
#include "mvd/graph.hpp"

// Reference implementations for tests. They work on plain adjacency matrices
// and deliberately share no code with the library beyond the Graph type.
namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix matrix_of(const mvd::Graph& g);

// Connectivity of the vertices not in `removed` (bitmask), by DFS.
bool connected_without(const Matrix& a, unsigned removed);
// x and y in different components once `removed` is deleted.
bool separated(const Matrix& a, unsigned removed, std::size_t x, std::size_t y);

std::vector<std::size_t> cut_vertices(const Matrix& a);

// Enumerates every subset S of V - {x, y}, keeps the monochromatic ones and
// tests separation directly.
bool has_monochromatic_cut(const Matrix& a, const std::vector<unsigned>& colors, std::size_t x,
                           std::size_t y);
bool is_mvd_coloring(const Matrix& a, const std::vector<unsigned>& colors);

// Maximum class count over all set partitions that pass the cut oracle.
// Fills `best` with one optimal coloring when given.
std::size_t mvd(const Matrix& a, std::vector<unsigned>* best = nullptr);
// True iff some partition into exactly k classes is an MVD-coloring.
bool mvd_coloring_with_classes(const Matrix& a, std::size_t k);

bool two_connected(const Matrix& a);
bool minimally_two_connected(const Matrix& a);

// Tries every permutation.
bool isomorphic(const Matrix& a, const Matrix& b);

// Minimally 2-connected graphs of order n up to isomorphism, by filtering all
// labeled graphs. Exponential in n(n-1)/2; fine up to n = 7.
std::vector<Matrix> minimal_blocks(std::size_t n);

// Random helpers. All graphs are labeled v1..vn in a shuffled order so that
// vertex 0 is not structurally special.
mvd::Graph random_tree(std::size_t n, std::mt19937& rng);
mvd::Graph random_connected(std::size_t n, double extra_edge_p, std::mt19937& rng);
mvd::Graph shuffled(const mvd::Graph& g, std::mt19937& rng);
// Attaches `block` to `base` by identifying block vertex `bv` with base vertex
// `at`. Labels are regenerated.
mvd::Graph glue(const mvd::Graph& base, const mvd::Graph& block, mvd::Vertex at, mvd::Vertex bv);
// Random tree-like assembly of the given blocks, each glued at a random
// vertex of the current graph.
mvd::Graph assemble(const std::vector<mvd::Graph>& blocks, std::mt19937& rng);

struct Cactus {
  mvd::Graph graph;
  std::size_t blocks = 0;
  std::size_t trivial = 0;
};
// Cactus built from even cycles (4, 6, 8) and bridges, at most max_order
// vertices.
Cactus random_even_cactus(std::size_t max_order, std::mt19937& rng);

}  // namespace oracle
