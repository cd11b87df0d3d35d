#include "cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvd/analysis.hpp"
#include "mvd/blocks.hpp"
#include "mvd/catalog.hpp"
#include "mvd/errors.hpp"
#include "mvd/graph_io.hpp"
#include "mvd/iso.hpp"
#include "mvd/verify.hpp"

namespace mvd::cli {

using Json = nlohmann::ordered_json;

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["input"] = {{"order", order}, {"size", size}};
  j["results"] = results;
  j["exit_code"] = exit_code;
  return j;
}

namespace {

ColoredGraph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

RunReport start(std::string command, const Graph& g) {
  RunReport r;
  r.command = std::move(command);
  r.order = g.order();
  r.size = g.size();
  return r;
}

std::vector<std::string> sorted_labels(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s.members()) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string brace(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
  return out + "}";
}

// Block subgraph re-laid out with its labels in sorted order.
Graph sorted_block(const Block& b) {
  std::vector<Vertex> order(b.order());
  for (Vertex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](Vertex x, Vertex y) { return b.subgraph.label(x) < b.subgraph.label(y); });
  return reorder(b.subgraph, order);
}

std::string method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::blocks: return "blocks";
    case SolveMethod::automatic: return "auto";
  }
  return "auto";
}

Json coloring_json(const Graph& g, const VertexColoring& c) {
  Json j = Json::object();
  for (Vertex v = 0; v < g.order(); ++v) j[g.label(v)] = c[v];
  return j;
}

}  // namespace

RunReport cmd_decompose(const std::string& path) {
  const Graph g = load_graph(path).graph;
  auto report = start("decompose", g);
  const auto dec = decompose(g);

  std::ostringstream text;
  const auto cuts = sorted_labels(g, dec.cut_vertices);
  text << "cut vertices: " << brace(cuts) << "\n";
  text << "blocks: " << dec.block_count() << "\n";
  Json blocks = Json::array();
  for (std::size_t i = 0; i < dec.block_count(); ++i) {
    const auto& b = dec.blocks[i];
    const auto kind = b.kind == BlockKind::trivial ? "trivial" : "nontrivial";
    const auto sorted = sorted_block(b);
    text << "\nblock " << i + 1 << " (" << kind << ", order " << b.order() << "): " << brace(b.sorted_labels())
         << "\n"
         << write_matrix_graph(sorted);
    blocks.push_back({{"vertices", b.sorted_labels()}, {"kind", kind}, {"matrix", write_matrix_graph(sorted)}});
  }
  report.results["cut_vertices"] = cuts;
  report.results["blocks"] = std::move(blocks);
  report.text = text.str();
  return report;
}

RunReport cmd_solve(const std::string& path, const SolveOptions& options) {
  const Graph g = load_graph(path).graph;
  auto report = start("solve", g);

  std::optional<Catalog> catalog;
  if (options.catalog_dir) catalog = load_catalog(*options.catalog_dir);
  const Catalog* cat = catalog ? &*catalog : nullptr;

  MvdResult result;
  switch (options.method) {
    case SolveMethod::exact: result = mvd_exact(g); break;
    case SolveMethod::blocks: result = mvd_via_blocks(g, cat); break;
    case SolveMethod::automatic: {
      auto closed = mvd_closed_form(g);
      result = closed ? *closed : mvd_via_blocks(g, cat);
      break;
    }
  }

  auto verdict = is_mvd_coloring(g, result.coloring);
  if (!verdict.ok || result.coloring.distinct_count() != result.value)
    throw VerificationError("solver produced a coloring that fails self-verification");
  const VertexColoring shown = options.preserve_colors ? result.coloring : result.coloring.renumbered();

  std::ostringstream text;
  text << "graph: n=" << g.order() << " m=" << g.size() << "\n";
  text << "method: " << method_name(options.method) << " (" << to_string(result.method) << ")\n";
  text << "mvd: " << result.value << "\n";
  Json trail = Json::array();
  if (!result.blocks.empty()) {
    const auto dec = decompose(g);
    for (const auto& s : result.blocks) {
      const auto& b = dec.blocks[s.block_index];
      text << "block " << s.block_index + 1 << " " << brace(b.sorted_labels()) << ": " << to_string(s.method);
      if (!s.catalog_id.empty()) text << " " << s.catalog_id;
      text << " -> " << s.value << "\n";
      trail.push_back({{"block", s.block_index + 1},
                       {"vertices", b.sorted_labels()},
                       {"method", to_string(s.method)},
                       {"catalog_id", s.catalog_id},
                       {"value", s.value}});
    }
  }
  text << "coloring:\n" << write_coloring(g, shown);
  text << "verify: PASS\n";

  if (options.emit_dot) write_text_file(*options.emit_dot, write_dot(g, shown));

  report.results["method"] = method_name(options.method);
  report.results["result_method"] = to_string(result.method);
  report.results["mvd"] = result.value;
  report.results["blocks"] = std::move(trail);
  report.results["coloring"] = coloring_json(g, shown);
  report.results["verified"] = true;
  report.text = text.str();
  return report;
}

RunReport cmd_verify(const std::string& graph_path, const std::optional<std::string>& coloring_path) {
  auto loaded = load_graph(graph_path);
  const Graph& g = loaded.graph;
  auto report = start("verify", g);
  VertexColoring c;
  if (coloring_path) {
    c = parse_coloring(read_text_file(*coloring_path), g);
  } else if (loaded.coloring) {
    c = *loaded.coloring;
  } else {
    throw InputError("no coloring given and the graph file carries no colors");
  }
  if (g.order() < 2 || !is_connected(g)) throw InputError("verification needs a connected graph with two or more vertices");

  const auto verdict = is_mvd_coloring(g, c);
  std::ostringstream text;
  if (verdict.ok) {
    text << "PASS\n";
    Json certs = Json::array();
    for (const auto& pc : verdict.certificate) {
      text << g.label(pc.x) << " " << g.label(pc.y) << " : " << pc.color << "\n";
      certs.push_back({{"x", g.label(pc.x)}, {"y", g.label(pc.y)}, {"color", pc.color}});
    }
    report.results["verdict"] = "PASS";
    report.results["certificate"] = std::move(certs);
  } else {
    const auto [x, y] = *verdict.witness;
    text << "FAIL\nwitness: " << g.label(x) << " " << g.label(y) << "\n";
    report.results["verdict"] = "FAIL";
    report.results["witness"] = {g.label(x), g.label(y)};
    report.exit_code = kVerifyFailed;
  }
  report.results["colors"] = c.distinct_count();
  report.text = text.str();
  return report;
}

RunReport cmd_iso(const std::string& path_a, const std::string& path_b) {
  const Graph g = load_graph(path_a).graph;
  const Graph h = load_graph(path_b).graph;
  auto report = start("iso", g);
  auto m = find_isomorphism(g, h);
  std::ostringstream text;
  if (!m) {
    text << "NOT ISOMORPHIC\n";
    report.results["isomorphic"] = false;
  } else {
    Json mapping = Json::object();
    for (Vertex v = 0; v < g.order(); ++v) {
      text << g.label(v) << " -> " << h.label((*m)(v)) << "\n";
      mapping[g.label(v)] = h.label((*m)(v));
    }
    report.results["isomorphic"] = true;
    report.results["mapping"] = std::move(mapping);
  }
  report.text = text.str();
  return report;
}

RunReport cmd_catalog_build(std::size_t max_order, const std::string& out_dir) {
  auto catalog = build_catalog(max_order);
  save_catalog(catalog, out_dir);
  RunReport report;
  report.command = "catalog build";
  Json orders = Json::array();
  for (std::size_t o = 3; o <= max_order; ++o) {
    Json values = Json::array();
    for (const auto* e : catalog.entries_of_order(o)) values.push_back(e->mvd_value);
    orders.push_back({{"order", o}, {"count", values.size()}, {"mvd_values", values}});
  }
  report.results["entries"] = catalog.size();
  report.results["census"] = std::move(orders);
  report.results["out"] = out_dir;
  report.text = census_table(catalog) + "\nwrote " + std::to_string(catalog.size()) + " entries to " + out_dir + "\n";
  return report;
}

RunReport cmd_classify(const std::string& path, const std::optional<std::string>& catalog_dir) {
  const Graph g = load_graph(path).graph;
  auto report = start("classify", g);
  std::optional<Catalog> catalog;
  if (catalog_dir) catalog = load_catalog(*catalog_dir);
  const auto result = classify(g, catalog ? &*catalog : nullptr);
  const std::string core_key =
      result.nontrivial_core.order() == 0
          ? std::string("-")
          : (result.nontrivial_core.order() <= kCanonicalOrderLimit ? canonical_form(result.nontrivial_core)
                                                                   : std::string("(too large)"));
  std::ostringstream text;
  text << "gate: PASS\n"
       << "n: " << result.order << "\n"
       << "mvd: " << result.mvd << "\n"
       << "regime: " << to_string(result.regime) << "\n"
       << "family: " << to_string(result.family) << "\n"
       << "nontrivial blocks: " << result.nontrivial_blocks << "\n"
       << "core key: " << core_key << "\n";
  report.results["gate"] = true;
  report.results["n"] = result.order;
  report.results["mvd"] = result.mvd;
  report.results["regime"] = to_string(result.regime);
  report.results["family"] = to_string(result.family);
  report.results["nontrivial_blocks"] = result.nontrivial_blocks;
  report.results["core_key"] = core_key;
  report.text = text.str();
  return report;
}

RunReport cmd_bound(const std::string& path) {
  const Graph g = load_graph(path).graph;
  auto report = start("bound", g);
  std::ostringstream text;
  Json bounds = Json::array();
  for (const auto& b : {bound_half_order(g), bound_blocks(g)}) {
    const char* name = b.kind == BoundKind::half_order ? "half-order" : "block-formula";
    text << name << ": " << (b.applicable ? "applicable" : "not applicable") << ", bound " << b.bound << " ("
         << b.reason << ")\n";
    bounds.push_back({{"kind", name}, {"applicable", b.applicable}, {"bound", b.bound}, {"reason", b.reason}});
  }
  report.results["bounds"] = std::move(bounds);
  report.text = text.str();
  return report;
}

RunReport cmd_export_dot(const std::string& path, const std::optional<std::string>& coloring_path,
                         const std::optional<std::string>& out, bool preserve_colors) {
  auto loaded = load_graph(path);
  const Graph& g = loaded.graph;
  auto report = start("export-dot", g);
  std::optional<VertexColoring> c = loaded.coloring;
  if (coloring_path) c = parse_coloring(read_text_file(*coloring_path), g);
  if (c && !preserve_colors) c = c->renumbered();
  const std::string dot = c ? write_dot(g, *c) : write_dot(g);
  if (out) {
    write_text_file(*out, dot);
    report.text = "wrote " + *out + "\n";
    report.results["out"] = *out;
  } else {
    report.text = dot;
  }
  report.results["dot"] = dot;
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic vertex-disconnection: block decomposition, exact and block-wise solving, "
               "verification, catalogs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a structured JSON report instead of text");

  std::string path, path_b;
  std::optional<std::string> coloring_path, catalog_dir, emit_dot, dot_out;
  std::string method = "auto";
  bool preserve_colors = false;
  std::size_t max_order = 0;
  std::string out_dir;

  auto* decompose_cmd = app.add_subcommand("decompose", "Print cut vertices and blocks");
  decompose_cmd->add_option("graph", path, "Graph file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Compute mvd and an mvd-coloring");
  solve_cmd->add_option("graph", path, "Graph file")->required();
  solve_cmd->add_option("--method", method, "exact | blocks | auto")
      ->check(CLI::IsMember({"exact", "blocks", "auto"}));
  solve_cmd->add_option("--catalog", catalog_dir, "Catalog directory used for block lookup");
  solve_cmd->add_option("--emit-dot", emit_dot, "Write the colored graph as DOT");
  solve_cmd->add_flag("--preserve-colors", preserve_colors, "Do not renumber colors 1..k");

  auto* verify_cmd = app.add_subcommand("verify", "Check an MVD-coloring");
  verify_cmd->add_option("graph", path, "Graph file")->required();
  verify_cmd->add_option("coloring", coloring_path, "Coloring file (label:color lines or colored matrix)");

  auto* iso_cmd = app.add_subcommand("iso", "Find an isomorphism between two graphs");
  iso_cmd->add_option("graph_a", path, "First graph")->required();
  iso_cmd->add_option("graph_b", path_b, "Second graph")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog of minimal blocks");
  catalog_cmd->require_subcommand(1);
  auto* build_cmd = catalog_cmd->add_subcommand("build", "Generate and solve minimal blocks");
  build_cmd->add_option("--max-order", max_order, "Largest order (3..10)")->required();
  build_cmd->add_option("--out", out_dir, "Output directory")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Gate and classify a graph by its mvd regime");
  classify_cmd->add_option("graph", path, "Graph file")->required();
  classify_cmd->add_option("--catalog", catalog_dir, "Catalog directory used for block lookup");

  auto* bound_cmd = app.add_subcommand("bound", "Report the upper bounds on mvd");
  bound_cmd->add_option("graph", path, "Graph file")->required();

  auto* dot_cmd = app.add_subcommand("export-dot", "Write a graph (optionally colored) as DOT");
  dot_cmd->add_option("graph", path, "Graph file")->required();
  dot_cmd->add_option("coloring", coloring_path, "Coloring file");
  dot_cmd->add_option("--out", dot_out, "Output path (default: stdout)");
  dot_cmd->add_flag("--preserve-colors", preserve_colors, "Do not renumber colors 1..k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  RunReport report;
  try {
    if (*decompose_cmd) {
      report = cmd_decompose(path);
    } else if (*solve_cmd) {
      SolveOptions options;
      options.method = method == "exact" ? SolveMethod::exact
                       : method == "blocks" ? SolveMethod::blocks
                                            : SolveMethod::automatic;
      options.catalog_dir = catalog_dir;
      options.emit_dot = emit_dot;
      options.preserve_colors = preserve_colors;
      report = cmd_solve(path, options);
    } else if (*verify_cmd) {
      report = cmd_verify(path, coloring_path);
    } else if (*iso_cmd) {
      report = cmd_iso(path, path_b);
    } else if (*build_cmd) {
      report = cmd_catalog_build(max_order, out_dir);
    } else if (*classify_cmd) {
      report = cmd_classify(path, catalog_dir);
    } else if (*bound_cmd) {
      report = cmd_bound(path);
    } else if (*dot_cmd) {
      report = cmd_export_dot(path, coloring_path, dot_out, preserve_colors);
    }
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kLimitError;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.text;
  }
  return report.exit_code;
}

}  // namespace mvd::cli
