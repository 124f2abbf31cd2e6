#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kustab/matrix.hpp"
#include "kustab/normal_forms.hpp"
#include "kustab/report.hpp"

namespace kustab {

/// Free Z-module with a symmetric integral bilinear form, given by its Gram
/// matrix in a fixed basis. Degenerate forms are allowed but flagged.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  explicit IntegralLattice(IntMatrix gram, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Int& determinant() const { return det_; }
  bool degenerate() const { return det_ == 0; }
  const Signature& signature() const { return sig_; }
  bool positive_definite() const { return sig_.positive == rank() && rank() > 0; }
  bool negative_definite() const { return sig_.negative == rank() && rank() > 0; }
  bool definite() const { return positive_definite() || negative_definite(); }
  bool even() const;

  Int pair(const IntVector& u, const IntVector& v) const;
  Int square(const IntVector& v) const { return pair(v, v); }
  /// G v, the pairings of v with the basis.
  IntVector pairings(const IntVector& v) const;
  IntVector basis_vector(std::size_t i) const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string name_;
  Int det_ = 1;
  Signature sig_;
};

/// A coordinate vector tied to the lattice it lives in.
struct LatticeVector {
  const IntegralLattice* lattice = nullptr;
  IntVector coords;
};

Int pair(const LatticeVector& u, const LatticeVector& v);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice scaled(const IntegralLattice& l, const Int& factor);

IntegralLattice lattice_a1();           ///< <2>
IntegralLattice lattice_a1_negative();  ///< A1(-1) = <-2>
IntegralLattice lattice_a1_squared();   ///< A1 + A1, Gram diag(2, 2)
IntegralLattice lattice_u();
IntegralLattice lattice_e8_negative();
/// Rank 4 lattice spanned by lambda_1, lambda_2, tau_1, tau_2 of discriminant -32s periods.
IntegralLattice lattice_ls(const Int& s);
/// E8(-1)^2 + U^2 + A1(-1)^2, signature (2, 20).
IntegralLattice lattice_lambda22();

/// Rank 24 lattice E8(-1)^2 + U^4 with lambda_1 = e + f in the third
/// summand's first U and lambda_2 = e' + f' in the next one. This is an
/// implementer convention, not a lattice written down in the source.
struct MukaiEmbedding {
  IntegralLattice ambient;
  IntVector lambda1;
  IntVector lambda2;
  std::string convention;

  IntVector vector(const Int& a, const Int& b) const;
};

MukaiEmbedding mukai24_default();
inline constexpr const char* kMukai24Convention =
    "implementer convention: E8(-1)^2 + U^4 with lambda_1 = e16 + e17, lambda_2 = e18 + e19";

/// Builds a named lattice. Accepts A1, A1(2), A1(-1), U, E8(-1), Ls(s),
/// Lambda22, Mukai24-default, an optional power suffix ^k on each term, and
/// sums joined by '+', e.g. "U+A1^2".
IntegralLattice build_named(const std::string& name);

/// Nontrivial invariant factors of coker(gram) (Smith normal form with 1s dropped).
std::vector<Int> discriminant_group(const IntegralLattice& l);
Int discriminant_order(const std::vector<Int>& factors);

/// Positive generator of (v, L).
Int divisibility(const IntegralLattice& l, const IntVector& v);

struct Complement {
  IntegralLattice lattice;
  IntMatrix embedding;  ///< rows: basis of the complement in ambient coordinates
};

/// Saturated {x : (x, v_i) = 0 for all i} with its induced Gram matrix.
Complement orthogonal_complement(const IntegralLattice& l, const std::vector<IntVector>& vs);

struct Enumeration {
  std::vector<IntVector> vectors;  ///< sorted lexicographically, zero excluded
  bool certified = false;          ///< exhaustive over the whole lattice
  std::int64_t bound_used = 0;     ///< coordinate box actually searched (when not certified)
  std::vector<std::int64_t> coordinate_bounds;  ///< certificate bounds (definite case)
};

/// All nonzero v with (v, v) = s. Definite lattices get a complete
/// Fincke-Pohst enumeration; otherwise |v_i| <= bound, capped by KU_STAB_MAX_ENUM.
Enumeration enumerate_square(const IntegralLattice& l, const Int& s, std::int64_t bound);

/// Brute-force box search used to cross-check enumerate_square.
std::vector<IntVector> box_search_square(const IntegralLattice& l, const Int& s, std::int64_t bound);

enum class SearchStatus { yes, no_certified, none_found_within_bound };
std::string to_string(SearchStatus s);

struct IsotropyResult {
  SearchStatus status = SearchStatus::none_found_within_bound;
  std::optional<IntVector> witness;
  std::string method;
  std::int64_t bound_used = 0;
};

struct HyperbolicResult {
  SearchStatus status = SearchStatus::none_found_within_bound;
  std::optional<std::pair<IntVector, IntVector>> witness;
  std::string method;
  std::int64_t bound_used = 0;
};

/// Nonzero primitive isotropic vector of the binary form [[a, b], [b, c]],
/// when b^2 - ac is a perfect square.
std::optional<IntVector> binary_isotropic_vector(const Int& a, const Int& b, const Int& c);

IsotropyResult isotropic_exists(const IntegralLattice& l, std::int64_t bound);
HyperbolicResult hyperbolic_plane_exists(const IntegralLattice& l, std::int64_t bound);

/// Given primitive isotropic u of divisibility 1, a w with w^2 = 0 and u.w = 1, if one
/// is reachable from the unit-pairing solution by an odd-square correction.
std::optional<IntVector> hyperbolic_partner(const IntegralLattice& l, const IntVector& u);

struct NegTwoCertificate {
  bool symbolic = false;       ///< x^2 + y^2 = 3 mod 4 has no solution
  long long enumerated = 0;    ///< points of the box visited
  long long found = 0;         ///< (-2)-vectors in the box
  Report report;
};

/// No delta with delta^2 = -2 in A1^2 + <-8s>: symbolic mod-4 argument and
/// exhaustive enumeration over |x|,|y|,|k| <= bound.
NegTwoCertificate neg_two_obstruction(std::int64_t s, std::int64_t bound);

/// Primitive form of v (divided by its content). Precondition: v != 0.
IntVector primitive_part(const IntVector& v);

std::string to_string(const IntVector& v);

}  // namespace kustab
