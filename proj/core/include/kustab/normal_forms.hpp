#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kustab/matrix.hpp"

namespace kustab {

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// Determinant over the rationals.
Rat determinant(const RatMatrix& m);

/// Nonzero diagonal of the Smith normal form, d_1 | d_2 | ... , all positive.
/// The number of entries equals the rank of m.
std::vector<Int> smith_invariants(IntMatrix m);

/// Saturated integer kernel {x in Z^n : m x = 0}, returned as the rows of a
/// matrix in row Hermite normal form (so the basis is canonical).
IntMatrix integer_kernel(const IntMatrix& m);

/// Row Hermite normal form of the row lattice of m; zero rows dropped.
IntMatrix row_hermite(IntMatrix m);

/// Unimodular U (n x n) with U * v = g * e_1, where g = gcd(v) > 0.
/// Precondition: v != 0.
IntMatrix unimodular_to_first_axis(const IntVector& v);

/// Inverse of an integer unimodular or rational square matrix over Q.
RatMatrix inverse(const RatMatrix& m);

/// Solves a^T x = 1 over the integers when gcd(a) = 1.
std::optional<IntVector> solve_unit_pairing(const IntVector& a);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Inertia of a symmetric rational matrix (diagonalization over Q).
Signature signature(const RatMatrix& m);

/// Gcd of the entries; 0 for the zero vector.
Int content(const IntVector& v);

}  // namespace kustab
