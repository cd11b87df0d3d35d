#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvd/coloring.hpp"
#include "mvd/graph.hpp"
#include "mvd/solve.hpp"

namespace mvd {

/// P(m1, ..., mk): hubs u and v joined by k internally disjoint paths, path i
/// having m_i internal vertices. At most one m_i may be 0 (the edge uv), and
/// k == 1 requires m1 >= 1. Hubs are labeled u, v; path vertices p<i>_<j>.
Graph theta_graph(std::span<const std::size_t> path_sizes);
/// Parses "m1,m2,...", with "j*m" standing for j copies of m, e.g. "3,2*1".
Graph theta_graph(std::string_view spec);

/// 2-connected, and deleting any single edge destroys 2-connectivity.
bool is_minimally_two_connected(const Graph& g);

bool triangle_free(const Graph& g);

/// All minimally 2-connected graphs of order n, pairwise non-isomorphic,
/// relabeled a, b, ... in canonical order and sorted by canonical key.
/// Built by closing the cycles C_3..C_n under ear additions (ears with at
/// least one internal vertex, distinct endpoints). Requires 3 <= n <= 10.
std::vector<Graph> generate_minimal_blocks(std::size_t n);

struct CatalogEntry {
  std::string id;
  Graph graph;
  std::size_t mvd_value = 0;
  VertexColoring coloring;
  /// canonical_form(graph)
  std::string key;
  /// Set for entries that are not minimally 2-connected.
  bool extra = false;

  std::size_t order() const noexcept { return graph.order(); }
};

/// Graphs with known mvd and a certified mvd-coloring, indexed by canonical
/// form.
class Catalog {
 public:
  /// Computes the key and extra flag if unset. Throws InputError when an
  /// isomorphic entry is already present.
  void add(CatalogEntry entry);

  /// Entry isomorphic to g, or nullptr. Graphs above the canonical-form guard
  /// never match.
  const CatalogEntry* find(const Graph& g) const;

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::vector<const CatalogEntry*> entries_of_order(std::size_t n) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<CatalogEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

using BlockSolver = std::function<MvdResult(const Graph&)>;

inline constexpr std::size_t kMaxCatalogOrder = 10;

/// One entry per minimal block of order 3..max_order, solved by `solver`
/// (mvd_exact by default). Entry ids follow the file naming,
/// "graph_<n>Vertex-<index>".
Catalog build_catalog(std::size_t max_order, const BlockSolver& solver = {});

/// Writes graph_<n>Vertex-<index>.txt per entry (matrix format with colors)
/// plus census.txt.
void save_catalog(const Catalog& catalog, const std::filesystem::path& dir);

/// Reads every graph_*.txt in dir. Each coloring is re-verified and its color
/// count checked against census.txt when that file lists the entry. Throws
/// InputError naming the offending file.
Catalog load_catalog(const std::filesystem::path& dir);

/// Census table: per order, the entry count and the mvd of each entry.
std::string census_table(const Catalog& catalog);

}  // namespace mvd
