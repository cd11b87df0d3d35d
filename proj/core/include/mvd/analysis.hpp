#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mvd/errors.hpp"
#include "mvd/graph.hpp"

namespace mvd {

class Catalog;

enum class BoundKind { half_order, block_formula };

struct BoundReport {
  BoundKind kind = BoundKind::half_order;
  bool applicable = false;
  std::string reason;
  std::size_t bound = 0;
};

/// floor(n/2), applicable to minimally 2-connected graphs with n >= 4.
BoundReport bound_half_order(const Graph& g);

/// floor((n + 2t - r + 1) / 2) for a connected graph with r blocks, t of them
/// trivial; applicable when every nontrivial block is minimally 2-connected
/// and triangle-free.
BoundReport bound_blocks(const Graph& g);

enum class Regime { n, n_minus_1, n_minus_2, n_minus_3, n_minus_4, n_minus_5, other };
enum class Family { tree, unicyclic_c4, class_a, class_b, class_c, unclassified };

std::string_view to_string(Regime r);
std::string_view to_string(Family f);

struct ClassificationResult {
  bool gate = false;
  std::size_t order = 0;
  std::size_t mvd = 0;
  Regime regime = Regime::other;
  Family family = Family::unclassified;
  /// Subgraph induced by the union of the nontrivial blocks (empty for trees).
  Graph nontrivial_core;
  std::size_t nontrivial_blocks = 0;
};

/// Thrown when a block of the input is not minimally 2-connected or contains
/// a triangle.
class GateError : public InputError {
 public:
  using InputError::InputError;
};

/// Gated classification of graphs with large mvd. The regime comes from the
/// solver; the family is a structural cross-check. Throws GateError when a
/// block fails the gate.
ClassificationResult classify(const Graph& g, const Catalog* catalog = nullptr);

/// n when every nontrivial block is a triangle, otherwise absent.
std::optional<std::size_t> triangle_blocks_value(const Graph& g);

}  // namespace mvd
