#pragma once

// Self-describing proof steps for composite certificates.
//
// A step is {check, args, expect, value[, certificates]}. `value` is a pure
// function of (check, args), so replay recomputes it from the serialized
// arguments alone; `expect` is a predicate on the value. Nested primitive
// certificates (sign and region certificates) are regenerated from args and
// carried alongside so they can be replayed step by step.

#include <string>
#include <vector>

#include "cenbm/certificate.hpp"
#include "cenbm/json.hpp"

namespace cenbm {

struct StepEvaluation {
  Json value;
  std::vector<Certificate> certificates;
};

/// Computes the value (and nested certificates) of a step from its check
/// name and args. Throws std::invalid_argument for unknown checks or
/// malformed arguments.
StepEvaluation evaluate_step(const std::string& check, const Json& args);

/// Predicate grammar: {"eq": v} | {"ge": r} | {"gt": r} | {"le": r} |
/// {"lt": r} | {"all_eq": r} | {"certificates": "pass"}; rationals as strings.
bool expectation_holds(const Json& expect, const Json& value, const std::vector<Certificate>& nested);

/// Builds, evaluates and appends a step to `cert`; marks the certificate
/// failed (with the step index) when the expectation does not hold.
void add_step(Certificate& cert, const std::string& check, Json args, Json expect);

}  // namespace cenbm
