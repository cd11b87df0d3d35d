#include "mvd/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

#include "mvd/errors.hpp"
#include "mvd/graph_io.hpp"
#include "mvd/iso.hpp"
#include "mvd/verify.hpp"

namespace mvd {

Graph theta_graph(std::span<const std::size_t> path_sizes) {
  const std::size_t k = path_sizes.size();
  if (k == 0) throw InputError("theta graph needs at least one path");
  if (k == 1 && path_sizes[0] == 0) throw InputError("P(0) is a bare edge, not a theta graph");
  if (std::count(path_sizes.begin(), path_sizes.end(), std::size_t{0}) > 1)
    throw InputError("at most one path of a theta graph may be empty (the edge uv)");

  std::vector<std::string> labels{"u", "v"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < path_sizes[i]; ++j) {
      labels.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      edges.emplace_back(prev, labels.size() - 1);
      prev = labels.size() - 1;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph(std::move(labels), edges);
}

Graph theta_graph(std::string_view spec) {
  auto number = [&](std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
      throw InputError("malformed theta graph spec '" + std::string(spec) + "'");
    return value;
  };
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    auto item = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (auto star = item.find('*'); star != std::string_view::npos) {
      std::size_t copies = number(item.substr(0, star));
      std::size_t value = number(item.substr(star + 1));
      sizes.insert(sizes.end(), copies, value);
    } else {
      sizes.push_back(number(item));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return theta_graph(sizes);
}

bool is_minimally_two_connected(const Graph& g) {
  if (!is_k_connected(g, 2)) return false;
  Graph h = g;
  for (auto [u, v] : g.edges()) {
    h.remove_edge(u, v);
    bool still = is_k_connected(h, 2);
    h.add_edge(u, v);
    if (still) return false;
  }
  return true;
}

bool triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighborhood(u).intersects(g.neighborhood(v))) return false;
  return true;
}

namespace {

Graph canonical_relabel(const Graph& g) {
  auto order = canonical_order(g);
  auto sorted = reorder(g, order);
  return Graph(letter_labels(g.order()), sorted.edges());
}

Graph add_ear(const Graph& g, Vertex a, Vertex b, std::size_t internal) {
  auto labels = indexed_labels(g.order() + internal);
  Graph out(std::move(labels), g.edges());
  Vertex prev = a;
  for (std::size_t i = 0; i < internal; ++i) {
    out.add_edge(prev, g.order() + i);
    prev = g.order() + i;
  }
  out.add_edge(prev, b);
  return out;
}

// levels[o] = minimal blocks of order o (3 <= o <= max_order), sorted by key.
// Every intermediate graph of an ear decomposition of a minimally 2-connected
// graph is itself minimally 2-connected (a removable edge stays removable
// after adding ears), and every ear has an internal vertex, so closing the
// cycles under ears while discarding non-minimal graphs is complete.
std::vector<std::vector<Graph>> minimal_block_levels(std::size_t max_order) {
  std::vector<std::map<std::string, Graph>> found(max_order + 1);
  for (std::size_t m = 3; m <= max_order; ++m) {
    Graph c(indexed_labels(m));
    for (Vertex v = 0; v < m; ++v) c.add_edge(v, (v + 1) % m);
    found[m].emplace(canonical_form(c), std::move(c));
  }
  std::set<std::string> rejected;
  for (std::size_t o = 3; o < max_order; ++o) {
    for (const auto& [key, g] : found[o]) {
      for (Vertex a = 0; a < o; ++a) {
        for (Vertex b = a + 1; b < o; ++b) {
          // An ear between adjacent vertices makes the edge ab removable.
          if (g.adjacent(a, b)) continue;
          for (std::size_t internal = 1; o + internal <= max_order; ++internal) {
            Graph h = add_ear(g, a, b, internal);
            auto& level = found[o + internal];
            auto hkey = canonical_form(h);
            if (level.count(hkey) != 0 || rejected.count(hkey) != 0) continue;
            if (is_minimally_two_connected(h)) {
              level.emplace(std::move(hkey), std::move(h));
            } else {
              rejected.insert(std::move(hkey));
            }
          }
        }
      }
    }
  }
  std::vector<std::vector<Graph>> levels(max_order + 1);
  for (std::size_t o = 3; o <= max_order; ++o)
    for (const auto& [key, g] : found[o]) levels[o].push_back(canonical_relabel(g));
  return levels;
}

void check_order_range(std::size_t n, const char* what) {
  if (n < 3 || n > kMaxCatalogOrder)
    throw InputError(std::string(what) + ": order must lie in 3.." + std::to_string(kMaxCatalogOrder) + ", got " +
                     std::to_string(n));
}

std::string entry_file(const std::string& id) { return id + ".txt"; }

}  // namespace

std::vector<Graph> generate_minimal_blocks(std::size_t n) {
  check_order_range(n, "generate_minimal_blocks");
  return minimal_block_levels(n)[n];
}

void Catalog::add(CatalogEntry entry) {
  if (entry.coloring.size() != entry.graph.order())
    throw InputError("catalog entry '" + entry.id + "': coloring does not cover the graph");
  if (entry.coloring.distinct_count() != entry.mvd_value)
    throw InputError("catalog entry '" + entry.id + "': coloring uses " +
                     std::to_string(entry.coloring.distinct_count()) + " colors, recorded mvd is " +
                     std::to_string(entry.mvd_value));
  if (entry.key.empty()) entry.key = canonical_form(entry.graph);
  entry.extra = !is_minimally_two_connected(entry.graph);
  if (auto it = index_.find(entry.key); it != index_.end())
    throw InputError("catalog entry '" + entry.id + "' is isomorphic to existing entry '" +
                     entries_[it->second].id + "'");
  if (entry.id.empty()) {
    std::size_t k = entries_of_order(entry.order()).size() + 1;
    auto taken = [&](const std::string& id) {
      return std::any_of(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.id == id; });
    };
    do {
      entry.id = "graph_" + std::to_string(entry.order()) + "Vertex-" + std::to_string(k++);
    } while (taken(entry.id));
  }
  index_.emplace(entry.key, entries_.size());
  entries_.push_back(std::move(entry));
}

const CatalogEntry* Catalog::find(const Graph& g) const {
  if (g.order() > kCanonicalOrderLimit) return nullptr;
  auto it = index_.find(canonical_form(g));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<const CatalogEntry*> Catalog::entries_of_order(std::size_t n) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.order() == n) out.push_back(&e);
  return out;
}

Catalog build_catalog(std::size_t max_order, const BlockSolver& solver) {
  check_order_range(max_order, "build_catalog");
  auto levels = minimal_block_levels(max_order);
  Catalog catalog;
  for (std::size_t o = 3; o <= max_order; ++o) {
    for (std::size_t i = 0; i < levels[o].size(); ++i) {
      const Graph& g = levels[o][i];
      MvdResult r = solver ? solver(g) : mvd_exact(g);
      CatalogEntry entry;
      entry.id = "graph_" + std::to_string(o) + "Vertex-" + std::to_string(i + 1);
      entry.graph = g;
      entry.mvd_value = r.value;
      entry.coloring = r.coloring.renumbered();
      catalog.add(std::move(entry));
    }
  }
  return catalog;
}

std::string census_table(const Catalog& catalog) {
  std::map<std::size_t, std::vector<const CatalogEntry*>> by_order;
  for (const auto& e : catalog.entries()) by_order[e.order()].push_back(&e);
  std::ostringstream out;
  out << "order count mvd_values\n";
  for (const auto& [order, entries] : by_order) {
    out << order << ' ' << entries.size();
    for (const auto* e : entries) out << ' ' << e->mvd_value;
    out << '\n';
  }
  out << "\nfile order mvd minimal\n";
  for (const auto& e : catalog.entries())
    out << entry_file(e.id) << ' ' << e.order() << ' ' << e.mvd_value << ' ' << (e.extra ? "no" : "yes") << '\n';
  return out.str();
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create catalog directory '" + dir.string() + "': " + ec.message());
  for (const auto& e : catalog.entries()) write_text_file(dir / entry_file(e.id), write_matrix_graph(e.graph, e.coloring));
  write_text_file(dir / "census.txt", census_table(catalog));
}

namespace {

// census.txt rows "file order mvd minimal" -> recorded mvd per file name.
std::map<std::string, std::size_t> read_census(const std::filesystem::path& path) {
  std::map<std::string, std::size_t> out;
  std::istringstream in(read_text_file(path));
  std::string line;
  bool in_files = false;
  while (std::getline(in, line)) {
    if (line.rfind("file ", 0) == 0) {
      in_files = true;
      continue;
    }
    if (!in_files || line.empty()) continue;
    std::istringstream row(line);
    std::string file;
    std::size_t order = 0;
    std::size_t value = 0;
    if (!(row >> file >> order >> value)) throw InputError("census.txt: malformed row '" + line + "'");
    out[file] = value;
  }
  return out;
}

}  // namespace

Catalog load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("catalog directory '" + dir.string() + "' not found");

  static const std::regex kName(R"(graph_(\d+)Vertex-(\d+)\.txt)");
  struct Found {
    std::size_t order;
    std::size_t index;
    std::filesystem::path path;
  };
  std::vector<Found> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (!item.is_regular_file()) continue;
    auto name = item.path().filename().string();
    std::smatch m;
    if (std::regex_match(name, m, kName)) files.push_back({std::stoul(m[1]), std::stoul(m[2]), item.path()});
  }
  std::sort(files.begin(), files.end(), [](const Found& a, const Found& b) {
    return std::tie(a.order, a.index) < std::tie(b.order, b.index);
  });

  std::map<std::string, std::size_t> census;
  if (std::filesystem::exists(dir / "census.txt")) census = read_census(dir / "census.txt");

  Catalog catalog;
  for (const auto& f : files) {
    const auto name = f.path.filename().string();
    try {
      auto parsed = parse_matrix_graph(read_text_file(f.path));
      if (!parsed.coloring) throw InputError("no colors in the header line");
      if (parsed.graph.order() < 2 || !is_connected(parsed.graph)) throw InputError("graph is not connected");
      auto verdict = is_mvd_coloring(parsed.graph, *parsed.coloring);
      if (!verdict.ok)
        throw InputError("coloring fails verification at pair (" + parsed.graph.label(verdict.witness->first) +
                         ", " + parsed.graph.label(verdict.witness->second) + ")");
      CatalogEntry entry;
      entry.id = f.path.stem().string();
      entry.mvd_value = parsed.coloring->distinct_count();
      if (auto it = census.find(name); it != census.end() && it->second != entry.mvd_value)
        throw InputError("coloring uses " + std::to_string(entry.mvd_value) + " colors but census records mvd " +
                         std::to_string(it->second));
      entry.graph = std::move(parsed.graph);
      entry.coloring = std::move(*parsed.coloring);
      catalog.add(std::move(entry));
    } catch (const Error& e) {
      throw InputError("catalog file '" + name + "': " + e.what());
    }
  }
  return catalog;
}

}  // namespace mvd
