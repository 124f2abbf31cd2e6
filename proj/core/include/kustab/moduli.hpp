#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kustab/lattice.hpp"
#include "kustab/mukai_vector.hpp"

namespace kustab {

/// (v,v) + 2 when (v,v) >= -2; empty when the moduli space is empty.
std::optional<Int> moduli_dimension(const Int& square);

struct Involution {
  Int modulus;  ///< a^2 + b^2
  Int witness;  ///< t with t^2 = -1 mod a^2 + b^2
};

/// t = a^{-1} b mod (a^2 + b^2). Throws InputError for non-coprime input.
Involution involution_exists(const MukaiVector& v);

struct ModuliReport {
  MukaiVector v;
  Int square;
  Int dimension;
  Int degree;
  Int divisibility;          ///< closed form a^2 + b^2
  Int lattice_divisibility;  ///< computed in v-perp of the default Mukai lattice
  MukaiVector polarization;  ///< h = b lambda_1 - a lambda_2
  Involution involution;
  Int prim_discriminant_order;  ///< discriminant of <lambda_1, lambda_2>-perp
  Int h_discriminant_order;     ///< discriminant of Z h
  Int h2_discriminant_order;    ///< discriminant of v-perp
  Int index;                    ///< k with prim + Zh of index k in v-perp
  std::string label;
  std::vector<std::string> candidates;
  std::string convention;
};

/// Divisibility of h = b lambda_1 - a lambda_2 inside v-perp of the default
/// Mukai lattice (generator of (h, v-perp)).
Int lattice_divisibility(const MukaiVector& v);

/// Dimension, degree, divisibility, polarization, involution, lattice checks
/// and example label. Throws InputError for non-coprime (a, b) and
/// std::logic_error if the closed form and the lattice computation disagree.
ModuliReport family_invariants(const MukaiVector& v);

std::string example_label(const Int& m);

/// Coprime (a, b) with 0 <= a <= max, |b| <= max, one of each +-v pair.
std::vector<ModuliReport> family_grid(int max);

struct H2Structure {
  bool quotient = false;  ///< v-perp / Z v (isotropic v) rather than v-perp
  IntegralLattice lattice;
  IntMatrix basis;  ///< rows in ambient coordinates (representatives, for the quotient)
  std::vector<Int> discriminant;
};

/// v-perp for (v,v) > 0, v-perp / Z v for (v,v) = 0. Throws for (v,v) < 0.
H2Structure h2_structure(const IntegralLattice& ambient, const IntVector& v);

/// Coordinates c with c * rows = v, for the rows of a row-echelon basis.
std::optional<IntVector> coordinates_in(const IntMatrix& rows, const IntVector& v);

}  // namespace kustab
