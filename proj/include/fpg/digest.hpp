#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fpg {

// FNV-1a 64-bit over a canonical serialization; stable across runs/platforms.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

struct Presentation;
std::string presentation_digest(const Presentation& p);

}  // namespace fpg
