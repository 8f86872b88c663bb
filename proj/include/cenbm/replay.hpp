#pragma once

// Independent re-verification of serialized certificates and proof ledgers.
//
// Composite steps are recomputed from their stored args; nested and
// top-level primitive certificates (sign_on_interval, region_empty) are
// regenerated from their inputs and compared step by step. A ledger is
// additionally checked against the canonical statement: entry names, kinds,
// inputs and every step's check/args/expect must be the ones the theorem
// needs, so editing an expectation cannot turn a failing proof into a pass.

#include <stdexcept>
#include <string>
#include <vector>

#include "cenbm/certificate.hpp"
#include "cenbm/json.hpp"

namespace cenbm {

/// Malformed input (unreadable file, invalid JSON, wrong document shape).
/// `location` is "line L, column C" for parse errors and a JSON path such as
/// entries[2].certificate otherwise.
class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::string location, const std::string& message);
  [[nodiscard]] const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct ReplayIssue {
  std::string location;  // e.g. entries[1].certificate.steps[3]
  std::string message;
};

struct ReplayReport {
  bool verdict = false;
  std::string document;  // "ledger" or the certificate kind
  std::size_t steps_replayed = 0;
  std::vector<ReplayIssue> issues;  // in document order

  [[nodiscard]] Json to_json() const;
};

/// Parses JSON text; empty or invalid input throws ReplayError with the
/// line and column of the problem.
Json parse_document(const std::string& text);

/// Replays a ledger ({theorem, entries, verdict}), a bare certificate
/// ({kind, inputs, steps, verdict}) or a report wrapping one under
/// "certificate". Throws ReplayError when the document has none of these
/// shapes.
ReplayReport replay_document(const Json& doc);

/// Reads, parses and replays a file.
ReplayReport replay_certificate(const std::string& path);

/// Replays one certificate; issues are reported relative to `location`.
/// Returns true iff it reproduces exactly and its recomputed verdict is pass.
bool replay_certificate_json(const Json& cert, const std::string& location, ReplayReport& report);

}  // namespace cenbm
