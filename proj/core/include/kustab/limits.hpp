#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "kustab/error.hpp"

namespace kustab {

inline constexpr std::uint64_t kDefaultMaxEnum = 1'000'000;

/// Candidate cap for bounded searches, from KU_STAB_MAX_ENUM when set.
inline std::uint64_t max_enum() {
  const char* env = std::getenv("KU_STAB_MAX_ENUM");
  if (env == nullptr || *env == '\0') return kDefaultMaxEnum;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("KU_STAB_MAX_ENUM must be a positive integer, got '") + env + "'");
}

/// Number of points in the box [-bound, bound]^dim, saturating at UINT64_MAX.
inline std::uint64_t box_size(std::uint64_t bound, std::size_t dim) {
  const std::uint64_t side = 2 * bound + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > UINT64_MAX / side) return UINT64_MAX;
    total *= side;
  }
  return total;
}

inline void require_within_cap(std::uint64_t candidates, const std::string& what) {
  const std::uint64_t cap = max_enum();
  if (candidates > cap)
    throw InputError(what + ": " + std::to_string(candidates) + " candidates exceed KU_STAB_MAX_ENUM=" +
                     std::to_string(cap));
}

}  // namespace kustab
