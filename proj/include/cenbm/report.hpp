#pragma once

// Report persistence shared by the CLI and the Python bindings.

#include <string>
#include <vector>

#include "cenbm/json.hpp"

namespace cenbm {

/// Library version string (CMake project version).
std::string tool_version();

struct RunConfig {
  std::string command;              // certify, replay, distance, oracle-search, claim, conjecture, cube-simplex, figures
  std::vector<std::string> inputs;  // input files, in argument order
  std::string output;               // report path; empty = stdout
  std::string outdir;               // figures only
  Json overrides = Json::object();  // grid/tolerance/flag overrides actually used

  /// Throws std::invalid_argument for an unknown command, a missing or
  /// non-regular input file, or an output whose parent directory does not
  /// exist.
  void validate() const;
  [[nodiscard]] Json to_json() const;
};

/// Appends {"generator": {name, version}, "run_config": ...} to an object.
Json with_provenance(Json report, const RunConfig& cfg);

/// Two-space indented dump with a trailing newline; byte-stable.
std::string serialize(const Json& j);

/// Writes text to path; throws std::runtime_error if the file cannot be
/// written.
void write_text_file(const std::string& path, const std::string& text);

/// Reads and parses a JSON file; throws std::invalid_argument naming the
/// path when it cannot be opened or parsed.
Json read_json_file(const std::string& path);

}  // namespace cenbm
