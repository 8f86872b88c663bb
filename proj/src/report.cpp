#include "cenbm/report.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cenbm {

namespace fs = std::filesystem;

std::string tool_version() { return CENBM_VERSION; }

void RunConfig::validate() const {
  static const std::array<const char*, 8> kCommands = {"certify", "replay",  "distance",     "oracle-search",
                                                       "claim",   "conjecture", "cube-simplex", "figures"};
  if (std::find_if(kCommands.begin(), kCommands.end(), [&](const char* c) { return command == c; }) ==
      kCommands.end()) {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  for (const auto& in : inputs) {
    std::error_code ec;
    if (!fs::is_regular_file(in, ec)) throw std::invalid_argument("input file not found: " + in);
  }
  if (!output.empty()) {
    const fs::path parent = fs::path(output).parent_path();
    std::error_code ec;
    if (!parent.empty() && !fs::is_directory(parent, ec)) {
      throw std::invalid_argument("output directory does not exist: " + parent.string());
    }
  }
}

Json RunConfig::to_json() const {
  return Json{{"command", command}, {"inputs", inputs}, {"output", output}, {"outdir", outdir}, {"overrides", overrides}};
}

Json with_provenance(Json report, const RunConfig& cfg) {
  if (!report.is_object()) throw std::invalid_argument("report must be a JSON object");
  report["generator"] = Json{{"name", "cenbm"}, {"version", tool_version()}};
  report["run_config"] = cfg.to_json();
  return report;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace cenbm
