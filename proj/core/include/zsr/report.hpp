#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

namespace zsr {

/// Outcome of a verifier or scan. Serialises as
///   {"theorem": ..., "scanned": N, "failures": [...], "rows": [...]}
/// with failures in the order they were found, so failures[0] is the first
/// counterexample.
struct Report {
  std::string theorem;
  std::size_t scanned = 0;
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();

  bool passed() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

}  // namespace zsr
