#pragma once

#include <json.hpp>

namespace cenbm {

// Insertion-ordered so reports keep their documented field order and stay
// byte-identical across runs.
using Json = nlohmann::ordered_json;

}  // namespace cenbm
