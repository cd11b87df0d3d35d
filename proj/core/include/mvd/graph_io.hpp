#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvd/coloring.hpp"
#include "mvd/graph.hpp"

namespace mvd {

/// A graph together with the coloring carried by its file, if any.
struct ColoredGraph {
  Graph graph;
  std::optional<VertexColoring> coloring;
};

/// Adjacency-matrix format:
///
///   a:1, b:2, c:1
///   0, 1, 1
///   1, 0, 1
///   1, 1, 0
///
/// The first line lists labels, each optionally suffixed with ":color"
/// (either every label carries a color or none does). Each following line is
/// one matrix row. Whitespace around tokens is ignored, blank lines are
/// skipped. The matrix must be square, symmetric, 0/1, with zero diagonal.
ColoredGraph parse_matrix_graph(std::string_view text);
std::string write_matrix_graph(const Graph& g);
std::string write_matrix_graph(const Graph& g, const VertexColoring& coloring);

/// Edge-list format:
///
///   n 4
///   v a
///   a b
///   b c
///
/// "n <count>" comes first. "v <label>" declares a vertex; any other line is
/// "labelU labelV" for one edge. Vertices are numbered by first appearance.
/// Lines starting with '#' are comments. A vertex labeled "v" cannot open an
/// edge line; the writer always declares vertices first and orders edge
/// endpoints so that this never happens.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Dispatches on the first significant line: "n <count>" selects the
/// edge-list format, anything else the matrix format.
ColoredGraph parse_graph(std::string_view text);

/// Builds the simple graph underlying a loop-free multigraph given by a
/// symmetric matrix of edge multiplicities.
Graph simplify(std::vector<std::string> labels,
               const std::vector<std::vector<int>>& multiplicities);

/// Coloring file: one "label:color" per line (also accepts comma-separated
/// entries on one line), or a full matrix file whose header carries colors.
/// The coloring must cover every vertex of g exactly once.
VertexColoring parse_coloring(std::string_view text, const Graph& g);
/// "label:color" lines in vertex order.
std::string write_coloring(const Graph& g, const VertexColoring& coloring);

/// Graphviz export. The colored variant fills each node from a fixed palette
/// indexed by color id.
std::string write_dot(const Graph& g);
std::string write_dot(const Graph& g, const VertexColoring& coloring);
/// Palette entry used for color c (cycles through a fixed list).
std::string_view dot_fill_color(Color c);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mvd
