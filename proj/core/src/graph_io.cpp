#include "mvd/graph_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mvd/errors.hpp"

namespace mvd {
namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number = 0;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (true) {
    auto end = text.find('\n');
    out.push_back({text.substr(0, end), number++});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  for (const auto& line : split_lines(text)) {
    auto t = trim(line.text);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<Token> split_on(std::string_view line, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    auto end = line.find(sep, start);
    auto piece = line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && is_space(piece[lead])) ++lead;
    out.push_back({trim(piece), start + lead + 1});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<Token> split_whitespace(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

void check_label(std::string_view label, const Line& line, std::size_t column) {
  if (label.empty()) throw ParseError("empty vertex label", line.number, column);
  for (char c : label) {
    if (is_space(c) || c == ',' || c == ':')
      throw ParseError("malformed vertex label '" + std::string(label) + "'", line.number, column);
  }
}

Color parse_color(std::string_view text, const Line& line, std::size_t column) {
  Color value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw ParseError("malformed color '" + std::string(text) + "' (expected a positive integer)", line.number,
                     column);
  return value;
}

std::string escape_dot(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

ColoredGraph parse_matrix_graph(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) return {};

  const Line& header = lines.front();
  std::vector<std::string> labels;
  std::vector<Color> colors;
  std::unordered_map<std::string_view, std::size_t> seen;
  for (const auto& tok : split_on(header.text, ',')) {
    auto colon = tok.text.find(':');
    auto label = trim(tok.text.substr(0, colon));
    check_label(label, header, tok.column);
    if (!seen.emplace(label, labels.size()).second)
      throw ParseError("duplicate vertex label '" + std::string(label) + "'", header.number, tok.column);
    labels.emplace_back(label);
    if (colon != std::string_view::npos) {
      auto color_text = trim(tok.text.substr(colon + 1));
      colors.push_back(parse_color(color_text, header, tok.column + colon + 1));
    } else if (!colors.empty()) {
      throw ParseError("vertex '" + std::string(label) + "' has no color while earlier vertices do", header.number,
                       tok.column);
    }
  }
  if (!colors.empty() && colors.size() != labels.size())
    throw ParseError("either every label carries a color or none does", header.number, 1);

  const std::size_t n = labels.size();
  if (lines.size() - 1 != n) {
    const Line& where = lines.size() - 1 > n ? lines[n + 1] : lines.back();
    throw ParseError("non-square matrix: " + std::to_string(n) + " labels but " +
                         std::to_string(lines.size() - 1) + " rows",
                     where.number, 1);
  }

  std::vector<std::vector<char>> entry(n, std::vector<char>(n, 0));
  std::vector<std::vector<std::size_t>> column_of(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const Line& row = lines[i + 1];
    auto toks = split_on(row.text, ',');
    if (toks.size() != n)
      throw ParseError("non-square matrix: row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(n),
                       row.number, 1);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& tok = toks[j];
      if (tok.text != "0" && tok.text != "1")
        throw ParseError("malformed matrix entry '" + std::string(tok.text) + "' (expected 0 or 1)", row.number,
                         tok.column);
      entry[i][j] = tok.text == "1" ? 1 : 0;
      column_of[i][j] = tok.column;
    }
    if (entry[i][i] != 0) throw ParseError("nonzero diagonal entry", row.number, column_of[i][i]);
  }

  Graph g(std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entry[i][j] != entry[j][i])
        throw ParseError("asymmetric matrix: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") differs from (" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")",
                         lines[i + 1].number, column_of[i][j]);
      if (entry[i][j]) g.add_edge(i, j);
    }
  }

  ColoredGraph out{std::move(g), std::nullopt};
  if (!colors.empty()) out.coloring = VertexColoring(std::move(colors));
  return out;
}

namespace {

std::string matrix_rows(const Graph& g) {
  std::string out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v > 0) out += ", ";
      out += g.adjacent(u, v) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string write_matrix_graph(const Graph& g) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v > 0) out += ", ";
    out += g.label(v);
  }
  out += '\n';
  return out + matrix_rows(g);
}

std::string write_matrix_graph(const Graph& g, const VertexColoring& coloring) {
  if (coloring.size() != g.order()) throw InputError("coloring does not cover the graph");
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v > 0) out += ", ";
    out += g.label(v) + ":" + std::to_string(coloring[v]);
  }
  out += '\n';
  return out + matrix_rows(g);
}

Graph parse_edge_list(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty edge list (expected \"n <count>\")", 1, 1);

  const Line& header = lines.front();
  auto head = split_whitespace(header.text);
  if (head.size() != 2 || head[0].text != "n")
    throw ParseError("edge list must start with \"n <count>\"", header.number, 1);
  std::size_t count = 0;
  {
    auto t = head[1].text;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), count);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      throw ParseError("malformed vertex count '" + std::string(t) + "'", header.number, head[1].column);
  }

  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto vertex = [&](const Token& tok, const Line& line) {
    check_label(tok.text, line, tok.column);
    auto [it, fresh] = index.try_emplace(std::string(tok.text), labels.size());
    if (fresh) labels.emplace_back(tok.text);
    return it->second;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    auto toks = split_whitespace(line.text);
    if (toks.size() != 2) throw ParseError("expected \"v <label>\" or \"<labelU> <labelV>\"", line.number, 1);
    if (toks[0].text == "v") {
      vertex(toks[1], line);
      continue;
    }
    Vertex u = vertex(toks[0], line);
    Vertex v = vertex(toks[1], line);
    if (u == v) throw ParseError("self-loop at '" + std::string(toks[0].text) + "'", line.number, toks[1].column);
    edges.emplace_back(u, v);
  }
  if (labels.size() != count)
    throw ParseError("header declares " + std::to_string(count) + " vertices but " + std::to_string(labels.size()) +
                         " were found",
                     header.number, head[1].column);
  return Graph(std::move(labels), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "v " + g.label(v) + "\n";
  for (auto [u, v] : g.edges()) {
    if (g.label(u) == "v") std::swap(u, v);
    out += g.label(u) + " " + g.label(v) + "\n";
  }
  return out;
}

ColoredGraph parse_graph(std::string_view text) {
  auto lines = significant_lines(text);
  if (!lines.empty()) {
    auto toks = split_whitespace(lines.front().text);
    if (toks.size() == 2 && toks[0].text == "n") return {parse_edge_list(text), std::nullopt};
  }
  return parse_matrix_graph(text);
}

Graph simplify(std::vector<std::string> labels, const std::vector<std::vector<int>>& multiplicities) {
  const std::size_t n = labels.size();
  if (multiplicities.size() != n) throw InputError("simplify: matrix size does not match the label count");
  for (const auto& row : multiplicities)
    if (row.size() != n) throw InputError("simplify: non-square multiplicity matrix");
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    if (multiplicities[i][i] != 0) throw InputError("simplify: loop at '" + g.label(i) + "'");
    for (std::size_t j = 0; j < i; ++j) {
      int m = multiplicities[i][j];
      if (m < 0 || m != multiplicities[j][i])
        throw InputError("simplify: multiplicities must be symmetric and nonnegative at ('" + g.label(i) + "', '" +
                         g.label(j) + "')");
      if (m > 0) g.add_edge(i, j);
    }
  }
  return g;
}

VertexColoring parse_coloring(std::string_view text, const Graph& g) {
  auto lines = significant_lines(text);
  bool matrix = false;
  if (lines.size() >= 2) {
    auto toks = split_on(lines[1].text, ',');
    matrix = std::all_of(toks.begin(), toks.end(), [](const Token& t) { return t.text == "0" || t.text == "1"; });
  }

  std::vector<Color> colors(g.order(), 0);
  if (matrix) {
    auto parsed = parse_matrix_graph(text);
    if (!parsed.coloring) throw InputError("coloring file has a matrix but no colors in its header");
    if (parsed.graph.order() != g.order()) throw InputError("coloring file describes a graph of different order");
    for (Vertex v = 0; v < parsed.graph.order(); ++v) {
      auto target = g.find(parsed.graph.label(v));
      if (!target) throw InputError("coloring names unknown vertex '" + parsed.graph.label(v) + "'");
      colors[*target] = (*parsed.coloring)[v];
    }
    for (auto [u, v] : parsed.graph.edges()) {
      if (!g.adjacent(g.index_of(parsed.graph.label(u)), g.index_of(parsed.graph.label(v))))
        throw InputError("coloring file describes a different graph");
    }
    if (parsed.graph.size() != g.size()) throw InputError("coloring file describes a different graph");
    return VertexColoring(std::move(colors));
  }

  for (const auto& line : lines) {
    for (const auto& piece : split_on(line.text, ',')) {
      for (const auto& tok : split_whitespace(piece.text)) {
        std::size_t column = piece.column + tok.column - 1;
        auto colon = tok.text.find(':');
        if (colon == std::string_view::npos)
          throw ParseError("expected \"label:color\", got '" + std::string(tok.text) + "'", line.number, column);
        auto label = tok.text.substr(0, colon);
        auto v = g.find(label);
        if (!v) throw ParseError("unknown vertex '" + std::string(label) + "'", line.number, column);
        if (colors[*v] != 0) throw ParseError("vertex '" + std::string(label) + "' colored twice", line.number, column);
        colors[*v] = parse_color(tok.text.substr(colon + 1), line, column + colon + 1);
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (colors[v] == 0) throw InputError("coloring is not total: vertex '" + g.label(v) + "' has no color");
  return VertexColoring(std::move(colors));
}

std::string write_coloring(const Graph& g, const VertexColoring& coloring) {
  if (coloring.size() != g.order()) throw InputError("coloring does not cover the graph");
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) out += g.label(v) + ":" + std::to_string(coloring[v]) + "\n";
  return out;
}

std::string_view dot_fill_color(Color c) {
  static constexpr std::array<std::string_view, 12> kPalette = {
      "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
      "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
  };
  return kPalette[(c - 1) % kPalette.size()];
}

namespace {

std::string dot_body(const Graph& g, const VertexColoring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  out << (coloring ? "  node [shape=circle, style=filled];\n" : "  node [shape=circle];\n");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto name = escape_dot(g.label(v));
    out << "  \"" << name << "\" [label=\"" << name;
    if (coloring) out << "\", color_id=\"" << (*coloring)[v] << "\", fillcolor=\"" << dot_fill_color((*coloring)[v]);
    out << "\"];\n";
  }
  for (auto [u, v] : g.edges())
    out << "  \"" << escape_dot(g.label(u)) << "\" -- \"" << escape_dot(g.label(v)) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string write_dot(const Graph& g) { return dot_body(g, nullptr); }

std::string write_dot(const Graph& g, const VertexColoring& coloring) {
  if (coloring.size() != g.order()) throw InputError("coloring does not cover the graph");
  return dot_body(g, &coloring);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace mvd
