#pragma once

#include <string>
#include <vector>

#include "kustab/chern.hpp"
#include "kustab/matrix.hpp"
#include "kustab/report.hpp"

namespace kustab {

/// ch(O_Sigma(x h1 + y h2)) = 1 + x h1 + y h2 + xy [pt].
ChernSigma line_bundle(const Int& x, const Int& y);
/// ch(E) * ch(O(x h1 + y h2)).
ChernSigma twist(const ChernSigma& e, const Int& x, const Int& y);
/// ch^dual: negate the degree-one part.
ChernSigma dual(const ChernSigma& e);

/// Underlying sheaf of Cl0 on Sigma: O + O(-1,-1) + O(-2,-1) + O(-1,-2).
const std::vector<std::pair<int, int>>& cl0_summands();
/// ch(Cl0(x h1 + y h2)) on Sigma.
ChernSigma cl0_sigma(const Int& x = 0, const Int& y = 0);

/// Integral over Sigma of ch(E)^dual ch(F) (1/4 - h1 h2 / 16).
Rat euler_pairing_sigma(const ChernSigma& e, const ChernSigma& f);
/// -rk^2/16 + (2 rk ch2 - ch1^2) / 4.
Rat euler_self_pairing_sigma(const ChernSigma& e);

/// chi(O_Sigma, O_Sigma(x h1 + y h2)) = (x+1)(y+1) on P^1 x P^1.
Int chi_structure_sheaf(const Int& x, const Int& y);
/// chi(Cl0, Cl0(x h1 + y h2)) computed through the forgetful adjunction.
Int chi_cl0_forgetful(const Int& x, const Int& y);

struct EulerMatrix {
  IntMatrix entries;
  std::vector<std::string> basis_labels;
};

/// Characters of Cl0, Cl0(-h1), Cl0(-h2), Cl0(-h).
std::vector<ChernSigma> clifford_basis();
std::vector<std::string> clifford_basis_labels();
/// The Euler matrix on the Clifford basis, computed by pairing characters.
EulerMatrix basis_gram();
/// The same matrix as a literal table.
EulerMatrix basis_gram_table();

/// rk divisible by 4. Throws InputError for a non-integral rank.
bool rank_divisibility_check(const ChernSigma& e);

/// chi(E, E) <= 2.
bool chi_bound_predicate(const Rat& chi_self);

struct Rank4Scan {
  long long classes = 0;         ///< (b1, b2, c) triples visited
  long long chi_two = 0;         ///< triples with chi(E,E) = 2
  long long counterexamples = 0; ///< chi = 2 triples escaping the parity obstruction
  Report report;
};

/// Every rank 4 integral class with chi(E,E) = 2 in the box |b1|,|b2|,|c| <= bound
/// has b1, b2 of different parity and a half-integral pairing against
/// ch(Ra|Sigma) = 4 - 2h + c' h1 h2 for every integer c'.
Rank4Scan rank4_chi2_obstruction(int search_bound);

/// chi(E, Ra|Sigma) as (value at c' = 0, coefficient of c').
std::pair<Rat, Rat> pairing_against_ra(const ChernSigma& e);

struct BogomolovScan {
  long long classes = 0;
  long long admissible = 0;  ///< integral chi, chi <= 2, not (rk, chi) = (4, 2)
  long long violations = 0;
  long long identity_failures = 0;
  Report report;
};

/// For rank rk and |b1|,|b2|,|c| <= bound: every admissible class has
/// Delta >= 0, and Delta/4 = rk^2/16 - chi(E,E) holds for every class.
BogomolovScan bogomolov_surface_scan(int rank, int bound);

}  // namespace kustab
