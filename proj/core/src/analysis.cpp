#include "mvd/analysis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "mvd/blocks.hpp"
#include "mvd/catalog.hpp"
#include "mvd/families.hpp"
#include "mvd/iso.hpp"
#include "mvd/solve.hpp"

namespace mvd {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::n: return "n";
    case Regime::n_minus_1: return "n-1";
    case Regime::n_minus_2: return "n-2";
    case Regime::n_minus_3: return "n-3";
    case Regime::n_minus_4: return "n-4";
    case Regime::n_minus_5: return "n-5";
    case Regime::other: return "other";
  }
  return "other";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::tree: return "tree";
    case Family::unicyclic_c4: return "unicyclic-C4";
    case Family::class_a: return "class-A";
    case Family::class_b: return "class-B";
    case Family::class_c: return "class-C";
    case Family::unclassified: return "unclassified";
  }
  return "unclassified";
}

BoundReport bound_half_order(const Graph& g) {
  BoundReport report{BoundKind::half_order, false, {}, g.order() / 2};
  if (g.order() < 4) {
    report.reason = "order below 4";
  } else if (!is_minimally_two_connected(g)) {
    report.reason = "not minimally 2-connected";
  } else {
    report.applicable = true;
    report.reason = "minimally 2-connected of order " + std::to_string(g.order());
  }
  return report;
}

namespace {

std::string block_name(const Block& b) {
  std::string out = "{";
  for (const auto& l : b.sorted_labels()) out += (out.size() > 1 ? "," : "") + l;
  return out + "}";
}

// Reason the block fails the minimal/triangle-free gate, or empty.
std::string gate_failure(const Block& b) {
  if (b.kind == BlockKind::trivial) return {};
  if (!is_minimally_two_connected(b.subgraph)) return "block " + block_name(b) + " is not minimally 2-connected";
  if (!triangle_free(b.subgraph)) return "block " + block_name(b) + " contains a triangle";
  return {};
}

}  // namespace

BoundReport bound_blocks(const Graph& g) {
  auto dec = decompose(g);
  const std::size_t n = g.order();
  const std::size_t r = dec.block_count();
  const std::size_t t = dec.trivial_count();
  BoundReport report{BoundKind::block_formula, true, {}, (n + 2 * t + 1 - r) / 2};
  for (const auto& b : dec.blocks) {
    if (auto why = gate_failure(b); !why.empty()) {
      report.applicable = false;
      report.reason = why;
      return report;
    }
  }
  report.reason = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " t=" + std::to_string(t);
  return report;
}

namespace {

std::vector<std::string> keys_of(std::initializer_list<Graph> graphs) {
  std::vector<std::string> out;
  for (const auto& g : graphs) out.push_back(canonical_form(g));
  return out;
}

bool key_in(const std::string& key, const std::vector<std::string>& keys) {
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

Family recognize(const std::vector<const Block*>& nontrivial, Regime regime) {
  if (nontrivial.empty()) return Family::tree;
  static const auto c4 = keys_of({cycle_graph(4)});
  static const auto class_a = keys_of({cycle_graph(5), complete_bipartite(2, 3), cycle_graph(6)});
  static const auto class_b = keys_of({cycle_graph(7), theta_graph("3,1,1"), theta_graph("2,1,1"),
                                       theta_graph("1,1,1,1"), cycle_graph(8)});
  auto key = [](const Block* b) {
    return b->order() <= kCanonicalOrderLimit ? canonical_form(b->subgraph) : std::string();
  };
  if (nontrivial.size() == 1) {
    auto k = key(nontrivial.front());
    if (key_in(k, c4)) return Family::unicyclic_c4;
    if (key_in(k, class_a)) return Family::class_a;
    if (key_in(k, class_b)) return Family::class_b;
  } else if (nontrivial.size() == 2 && key_in(key(nontrivial[0]), c4) && key_in(key(nontrivial[1]), c4)) {
    return Family::class_b;
  }
  return regime == Regime::n_minus_5 ? Family::class_c : Family::unclassified;
}

}  // namespace

ClassificationResult classify(const Graph& g, const Catalog* catalog) {
  auto dec = decompose(g);
  for (const auto& b : dec.blocks)
    if (auto why = gate_failure(b); !why.empty()) throw GateError("classification refused: " + why);

  ClassificationResult out;
  out.gate = true;
  out.order = g.order();
  out.mvd = mvd_via_blocks(g, catalog).value;

  static constexpr std::array<Regime, 6> kRegimes = {Regime::n,         Regime::n_minus_1, Regime::n_minus_2,
                                                     Regime::n_minus_3, Regime::n_minus_4, Regime::n_minus_5};
  const std::size_t drop = out.order - out.mvd;
  out.regime = drop < kRegimes.size() ? kRegimes[drop] : Regime::other;
  if (out.regime == Regime::n_minus_1)
    throw std::logic_error("gated graph with mvd = n-1; the classification excludes this regime");

  std::vector<const Block*> nontrivial;
  VertexSet core(g.order());
  for (const auto& b : dec.blocks) {
    if (b.kind != BlockKind::nontrivial) continue;
    nontrivial.push_back(&b);
    for (Vertex v : b.vertices) core.insert(v);
  }
  out.nontrivial_blocks = nontrivial.size();
  if (!core.empty()) out.nontrivial_core = induced_subgraph(g, core);
  out.family = recognize(nontrivial, out.regime);
  return out;
}

std::optional<std::size_t> triangle_blocks_value(const Graph& g) {
  auto dec = decompose(g);
  for (const auto& b : dec.blocks)
    if (b.kind == BlockKind::nontrivial && !(b.order() == 3 && b.subgraph.is_complete())) return std::nullopt;
  return g.order();
}

}  // namespace mvd
