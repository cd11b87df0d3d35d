#include "mvd/solve.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "mvd/catalog.hpp"
#include "mvd/errors.hpp"
#include "mvd/iso.hpp"
#include "mvd/partitions.hpp"
#include "mvd/verify.hpp"

namespace mvd {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::closed_form: return "closed-form";
    case Method::catalog: return "catalog";
    case Method::block_composed: return "block-composed";
    case Method::counting_formula: return "counting-formula";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

// Bit-parallel view of a small graph for the partition search.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g) : adj_(g.order(), 0) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v : g.neighbors(u)) adj_[u] |= bit(v);
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = x + 1; y < g.order(); ++y)
        if (!g.adjacent(x, y)) pairs_.emplace_back(x, y);
  }

  // True iff every nonadjacent pair is separated by some class minus the pair.
  // A failing pair is moved to the front so later candidates fail fast.
  bool is_mvd(std::span<const Mask> classes) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pair_separated(classes, pairs_[i].first, pairs_[i].second)) continue;
      std::rotate(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(i),
                  pairs_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return false;
    }
    return true;
  }

 private:
  bool pair_separated(std::span<const Mask> classes, Vertex x, Vertex y) const {
    const Mask ends = bit(x) | bit(y);
    for (Mask cls : classes) {
      const Mask cut = cls & ~ends;
      if (cut == 0) continue;
      if ((reach(x, cut) & bit(y)) == 0) return true;
    }
    return false;
  }

  Mask reach(Vertex start, Mask blocked) const {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~blocked & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  std::vector<Mask> adj_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

void require_solvable(const Graph& g) {
  if (g.order() < 2) throw InputError("mvd is defined for graphs with at least two vertices");
  if (!is_connected(g)) throw InputError("mvd is defined for connected graphs only");
}

MvdResult all_distinct(const Graph& g, Method method) {
  return {g.order(), VertexColoring::distinct(g.order()), method, {}};
}

struct BlockOutcome {
  MvdResult result;
  BlockSolution solution;
};

BlockOutcome solve_block(const Graph& sub, std::size_t index, const Catalog* catalog) {
  if (sub.order() == 2) {
    auto r = all_distinct(sub, Method::closed_form);
    return {r, {index, Method::closed_form, r.value, {}}};
  }
  if (catalog != nullptr && sub.order() <= kCanonicalOrderLimit) {
    if (const auto* entry = catalog->find(sub)) {
      auto m = find_isomorphism(sub, entry->graph);
      if (!m) throw std::logic_error("catalog key matched a non-isomorphic graph");
      MvdResult r{entry->mvd_value, transfer_coloring(*m, entry->coloring), Method::catalog, {}};
      return {r, {index, Method::catalog, r.value, entry->id}};
    }
  }
  if (auto r = mvd_closed_form(sub)) return {*r, {index, Method::closed_form, r->value, {}}};
  if (sub.order() > kExactOrderLimit) {
    std::string labels;
    for (const auto& l : sub.labels()) labels += (labels.empty() ? "" : ",") + l;
    throw GuardError("block {" + labels + "} has order " + std::to_string(sub.order()) +
                     ", above the exact-search limit of " + std::to_string(kExactOrderLimit) +
                     ", and has no catalog or closed-form match");
  }
  auto r = mvd_exact(sub);
  return {r, {index, Method::exact, r.value, {}}};
}

}  // namespace

MvdResult mvd_exact(const Graph& g, ExactOptions options) {
  require_solvable(g);
  const std::size_t n = g.order();
  if (n > kExactOrderLimit)
    throw GuardError("exact search is limited to " + std::to_string(kExactOrderLimit) + " vertices, got " +
                     std::to_string(n));
  if (g.is_complete()) return all_distinct(g, Method::exact);

  std::size_t start = n;
  if (options.half_order_bound && n >= 4 && is_minimally_two_connected(g)) start = n / 2;

  MaskGraph mg(g);
  std::vector<Mask> classes;
  for (std::size_t k = start; k >= 1; --k) {
    RestrictedGrowthPartitions partitions(n, k);
    do {
      auto rgs = partitions.current();
      classes.assign(k, 0);
      for (std::size_t v = 0; v < n; ++v) classes[rgs[v]] |= bit(v);
      if (mg.is_mvd(classes)) {
        std::vector<Color> colors(n);
        for (std::size_t v = 0; v < n; ++v) colors[v] = static_cast<Color>(rgs[v] + 1);
        return {k, VertexColoring(std::move(colors)), Method::exact, {}};
      }
    } while (partitions.next());
  }
  // Unreachable for connected non-complete graphs: one class always works.
  throw std::logic_error("mvd_exact: no MVD-coloring found");
}

std::optional<MvdResult> mvd_closed_form(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  if (g.is_complete() || is_tree(g)) return all_distinct(g, Method::closed_form);
  if (!is_cycle(g)) return std::nullopt;

  // Walk the cycle from vertex 0 towards its smaller neighbor; the j-th
  // vertex (1-based) gets color ((j - 1) mod floor(n/2)) + 1.
  const std::size_t n = g.order();
  const std::size_t period = n / 2;
  std::vector<Color> colors(n, 0);
  Vertex prev = 0;
  Vertex cur = 0;
  for (std::size_t j = 0; j < n; ++j) {
    colors[cur] = static_cast<Color>(j % period + 1);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] != prev || j == 0 ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  }
  return MvdResult{period, VertexColoring(std::move(colors)), Method::closed_form, {}};
}

std::size_t mvd_compose(const BlockDecomposition& dec, std::span<const MvdResult> per_block) {
  std::vector<std::size_t> values;
  values.reserve(per_block.size());
  for (const auto& r : per_block) values.push_back(r.value);
  return mvd_compose(dec, values);
}

std::size_t mvd_compose(const BlockDecomposition& dec, std::span<const std::size_t> block_values) {
  if (block_values.size() != dec.block_count())
    throw InputError("compose: " + std::to_string(block_values.size()) + " block values for " +
                     std::to_string(dec.block_count()) + " blocks");
  std::size_t sum = 0;
  for (auto v : block_values) sum += v;
  return sum - dec.block_count() + 1;
}

std::size_t counting_formula(const BlockDecomposition& dec, std::span<const std::size_t> block_values) {
  if (block_values.size() != dec.block_count())
    throw InputError("counting formula: " + std::to_string(block_values.size()) + " block values for " +
                     std::to_string(dec.block_count()) + " blocks");
  std::size_t tally[6] = {};
  for (auto v : block_values) {
    if (v < 2 || v > 5)
      throw InputError("counting formula needs block values in 2..5, got " + std::to_string(v));
    ++tally[v];
  }
  return 4 * tally[5] + 3 * tally[4] + 2 * tally[3] + tally[2] + 1;
}

VertexColoring stitch_colorings(const Graph& g, const BlockDecomposition& dec,
                                std::span<const VertexColoring> per_block) {
  if (per_block.size() != dec.block_count())
    throw InputError("stitch: " + std::to_string(per_block.size()) + " colorings for " +
                     std::to_string(dec.block_count()) + " blocks");
  for (std::size_t b = 0; b < dec.block_count(); ++b) {
    const auto& block = dec.blocks[b];
    if (per_block[b].size() != block.order())
      throw InputError("stitch: coloring of block " + std::to_string(b + 1) + " has the wrong size");
    auto verdict = is_mvd_coloring(block.subgraph, per_block[b]);
    if (!verdict.ok)
      throw VerificationError("stitch: coloring of block " + std::to_string(b + 1) +
                              " is not an MVD-coloring (pair " + block.subgraph.label(verdict.witness->first) +
                              ", " + block.subgraph.label(verdict.witness->second) + ")");
  }

  std::vector<std::vector<std::size_t>> blocks_of(g.order());
  for (std::size_t b = 0; b < dec.block_count(); ++b)
    for (Vertex v : dec.blocks[b].vertices) blocks_of[v].push_back(b);

  std::vector<Color> global(g.order(), 0);
  std::vector<bool> queued(dec.block_count(), false);
  Color next_color = 1;
  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < dec.block_count(); ++seed) {
    if (queued[seed]) continue;
    queued[seed] = true;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::size_t b = queue.front();
      queue.pop_front();
      const auto& block = dec.blocks[b];
      const auto& local = per_block[b];

      std::unordered_map<Color, Color> rename;
      std::size_t precolored = 0;
      for (std::size_t i = 0; i < block.order(); ++i) {
        if (global[block.vertices[i]] == 0) continue;
        ++precolored;
        rename.emplace(local[i], global[block.vertices[i]]);
      }
      if (precolored > 1) throw std::logic_error("stitch: block meets two colored vertices");
      for (std::size_t i = 0; i < block.order(); ++i) {
        auto [it, fresh] = rename.try_emplace(local[i], next_color);
        if (fresh) ++next_color;
        global[block.vertices[i]] = it->second;
      }
      for (Vertex v : block.vertices) {
        for (std::size_t other : blocks_of[v]) {
          if (queued[other]) continue;
          queued[other] = true;
          queue.push_back(other);
        }
      }
    }
  }
  return VertexColoring(std::move(global));
}

MvdResult mvd_via_blocks(const Graph& g, const Catalog* catalog) {
  require_solvable(g);
  auto dec = decompose(g);

  std::vector<VertexColoring> colorings;
  std::vector<std::size_t> values;
  std::vector<BlockSolution> trail;
  bool all_lookup = true;
  for (std::size_t b = 0; b < dec.block_count(); ++b) {
    auto outcome = solve_block(dec.blocks[b].subgraph, b, catalog);
    colorings.push_back(std::move(outcome.result.coloring));
    values.push_back(outcome.result.value);
    all_lookup = all_lookup && (outcome.solution.method == Method::catalog || dec.blocks[b].order() == 2);
    trail.push_back(std::move(outcome.solution));
  }

  MvdResult result;
  result.coloring = stitch_colorings(g, dec, colorings);
  result.value = mvd_compose(dec, values);
  result.method = Method::block_composed;
  result.blocks = std::move(trail);
  const bool small_values =
      std::all_of(values.begin(), values.end(), [](std::size_t v) { return v >= 2 && v <= 5; });
  if (all_lookup && small_values) {
    if (counting_formula(dec, values) != result.value)
      throw std::logic_error("counting formula disagrees with block composition");
    result.method = Method::counting_formula;
  }
  if (result.coloring.distinct_count() != result.value)
    throw std::logic_error("stitched coloring uses " + std::to_string(result.coloring.distinct_count()) +
                           " colors, expected " + std::to_string(result.value));
  return result;
}

}  // namespace mvd
