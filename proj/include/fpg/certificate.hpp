#pragma once

#include <string>

#include "json.hpp"

namespace fpg {

enum class CertStatus { certified, theorem_cited, asserted, unknown, refuted };

std::string to_string(CertStatus s);

// A machine-checked (or explicitly cited/asserted) fact about an input,
// pinned to that input by a canonical digest.
struct Certificate {
  std::string claim;
  long bound = 0;
  CertStatus status = CertStatus::unknown;
  std::string strategy;
  long runtime_ms = 0;
  std::string input_digest;
  nlohmann::ordered_json evidence;  // witness data or citation text
};

}  // namespace fpg
