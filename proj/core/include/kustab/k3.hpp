#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kustab/lattice.hpp"

namespace kustab {

enum class DivisorStatus { invalid, single, split };
std::string to_string(DivisorStatus s);

struct PeriodDivisorLabel {
  std::int64_t d = 0;
  DivisorStatus status = DivisorStatus::invalid;
  std::vector<std::string> components;
};

/// D_d is irreducible for d = 0, 4 mod 8 and splits as D'_d + D''_d for d = 2 mod 8.
PeriodDivisorLabel d_label(std::int64_t d);

struct StarStarPrime {
  bool holds = false;
  std::vector<std::pair<std::int64_t, int>> factorization;  ///< (prime, exponent), increasing
};

/// Every prime p = 3 mod 4 divides d to an even power. Trial division.
StarStarPrime star_star_prime(std::int64_t d);

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

struct CriterionResult {
  SearchStatus status = SearchStatus::none_found_within_bound;
  std::vector<IntVector> witness;  ///< v, or (u, w) spanning a hyperbolic plane
  std::string method;
  std::int64_t bound_used = 0;
  std::string note;
};

inline constexpr const char* kSublatticeNote =
    "answer concerns the supplied lattice; for a proper sublattice of the algebraic Mukai lattice a negative answer "
    "says nothing about the full lattice";

/// Twisted associated K3: a nonzero isotropic algebraic class.
CriterionResult twisted_k3_criterion(const IntegralLattice& hodge, std::int64_t bound);
/// Untwisted associated K3: a hyperbolic plane among algebraic classes.
CriterionResult untwisted_k3_criterion(const IntegralLattice& hodge, std::int64_t bound);

/// Real and imaginary parts of a class in H^{1,1} tensored with C.
struct EtaVector {
  IntegralLattice lattice;
  RatVector re;
  RatVector im;
};

Rat pair_rational(const IntegralLattice& l, const RatVector& u, const RatVector& v);

/// (re, im) spans a positive definite 2-plane.
bool in_P(const EtaVector& eta);

enum class Membership { in_certified, not_in, in_within_bound };
std::string to_string(Membership m);

struct P0Result {
  Membership status = Membership::not_in;
  bool in_p = false;
  std::optional<IntVector> obstruction;  ///< a (-2)-class orthogonal to re and im
  std::size_t complement_rank = 0;
  std::int64_t bound_used = 0;
};

/// In P and orthogonal to no (-2)-class.
P0Result in_P0(const EtaVector& eta, std::int64_t bound);

/// For 32 | d with (**') holding, certifies s = d/32 through neg_two_obstruction.
Report period_obstruction(std::int64_t d, std::int64_t bound);

}  // namespace kustab
