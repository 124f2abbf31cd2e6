#pragma once

#include <cstdint>
#include <string>

namespace kustab {

/// a*lambda_1 + b*lambda_2 in the canonical A1^2 sublattice of the Mukai lattice.
struct MukaiVector {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool primitive() const;
  /// (v, v) = 2(a^2 + b^2).
  std::int64_t square() const { return 2 * (a * a + b * b); }
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend auto operator<=>(const MukaiVector&, const MukaiVector&) = default;
};

/// Parses "a,b".
MukaiVector parse_mukai_vector(const std::string& text);

}  // namespace kustab
