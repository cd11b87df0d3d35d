#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvd/blocks.hpp"
#include "mvd/coloring.hpp"
#include "mvd/graph.hpp"

namespace mvd {

class Catalog;

enum class Method { exact, closed_form, catalog, block_composed, counting_formula };

std::string_view to_string(Method m);

/// How one block was solved inside mvd_via_blocks.
struct BlockSolution {
  std::size_t block_index = 0;
  Method method = Method::exact;
  std::size_t value = 0;
  /// Id of the matching catalog entry when method == catalog.
  std::string catalog_id;
};

struct MvdResult {
  std::size_t value = 0;
  VertexColoring coloring;
  Method method = Method::exact;
  /// Filled by mvd_via_blocks only.
  std::vector<BlockSolution> blocks;
};

/// Largest order mvd_exact accepts (the search is over set partitions).
inline constexpr std::size_t kExactOrderLimit = 11;

struct ExactOptions {
  /// Start the descent at floor(n/2) for minimally 2-connected inputs with
  /// n >= 4. Disable to let the search confirm the bound independently.
  bool half_order_bound = true;
};

/// Exhaustive search: tries class counts k = n, n-1, ... and returns the
/// first partition into k classes (restricted-growth order) that is an
/// MVD-coloring. Complete graphs short-circuit to n.
MvdResult mvd_exact(const Graph& g, ExactOptions options = {});

/// Known values: complete graphs (n), trees (n), cycles C_n with n >= 4
/// (floor(n/2), v_j colored by j mod floor(n/2)). Absent for anything else.
std::optional<MvdResult> mvd_closed_form(const Graph& g);

/// sum of block values - r + 1.
std::size_t mvd_compose(const BlockDecomposition& dec, std::span<const MvdResult> per_block);
std::size_t mvd_compose(const BlockDecomposition& dec, std::span<const std::size_t> block_values);

/// 4 n5 + 3 n4 + 2 n3 + n2 + 1, where n_i counts blocks of value i. Every
/// block value must lie in 2..5.
std::size_t counting_formula(const BlockDecomposition& dec,
                             std::span<const std::size_t> block_values);

/// Glues per-block MVD-colorings (indexed like each block's subgraph) into a
/// coloring of g. Blocks are visited along the block-cut tree from block 0,
/// so every later block meets exactly one already-colored vertex; that
/// vertex's class keeps its color and all other classes get fresh
/// consecutive colors. Throws VerificationError if a block coloring fails.
VertexColoring stitch_colorings(const Graph& g, const BlockDecomposition& dec,
                                std::span<const VertexColoring> per_block);

/// Decomposes g, solves each block (K2 directly, then catalog lookup, closed
/// forms, exact search) and stitches the block colorings.
MvdResult mvd_via_blocks(const Graph& g, const Catalog* catalog = nullptr);

}  // namespace mvd
