#pragma once

#include <cstdint>
#include <random>

#include "kustab/matrix.hpp"
#include "kustab/rational.hpp"

namespace kustab::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed2026);
  return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rat random_rat(std::int64_t range = 40) {
  std::int64_t d = 0;
  while (d == 0) d = uniform(-range, range);
  return Rat(Int(static_cast<long>(uniform(-range, range))), Int(static_cast<long>(d)));
}

inline IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(uniform(lo, hi));
  return m;
}

inline IntMatrix random_symmetric(std::size_t n, std::int64_t lo, std::int64_t hi) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<long>(uniform(lo, hi));
  return m;
}

}  // namespace kustab::test
