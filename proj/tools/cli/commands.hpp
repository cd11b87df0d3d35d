#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "mvd/solve.hpp"

namespace mvd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kLimitError = 3;

/// Outcome of one subcommand: human-readable text plus the same content as
/// structured data.
struct RunReport {
  std::string command;
  std::size_t order = 0;
  std::size_t size = 0;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string text;
  int exit_code = kOk;

  nlohmann::ordered_json to_json() const;
};

enum class SolveMethod { exact, blocks, automatic };

struct SolveOptions {
  SolveMethod method = SolveMethod::automatic;
  std::optional<std::string> catalog_dir;
  std::optional<std::string> emit_dot;
  bool preserve_colors = false;
};

// Each command throws mvd::Error subclasses on bad input; run() maps them to
// exit codes.
RunReport cmd_decompose(const std::string& path);
RunReport cmd_solve(const std::string& path, const SolveOptions& options);
RunReport cmd_verify(const std::string& graph_path, const std::optional<std::string>& coloring_path);
RunReport cmd_iso(const std::string& path_a, const std::string& path_b);
RunReport cmd_catalog_build(std::size_t max_order, const std::string& out_dir);
RunReport cmd_classify(const std::string& path, const std::optional<std::string>& catalog_dir);
RunReport cmd_bound(const std::string& path);
RunReport cmd_export_dot(const std::string& path, const std::optional<std::string>& coloring_path,
                         const std::optional<std::string>& out, bool preserve_colors);

/// Parses argv, runs the subcommand and prints its report (text, or JSON with
/// --json). Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mvd::cli
