#include <doctest.h>

#include "../support.hpp"
#include "kustab/error.hpp"
#include "kustab/euler_sigma.hpp"
#include "kustab/normal_forms.hpp"

using namespace kustab;

TEST_CASE("line bundle characters and Riemann-Roch") {
  CHECK(line_bundle(2, -3) == ChernSigma{1, 2, -3, -6});
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y) CHECK(chi_structure_sheaf(x, y) == (x + 1) * (y + 1));
}

TEST_CASE("Cl0 on the quadric surface") {
  CHECK(cl0_sigma() == ChernSigma{4, -4, -4, 5});
  CHECK(cl0_summands().size() == 4);
  CHECK(twist(cl0_sigma(), -1, 0) == cl0_sigma(-1, 0));
  CHECK(dual(line_bundle(1, 2)) == line_bundle(-1, -2));
}

TEST_CASE("Euler matrix of the Clifford basis") {
  const EulerMatrix g = basis_gram();
  const IntMatrix expected{{1, 1, 1, 5}, {1, 1, -3, 1}, {1, -3, 1, 1}, {5, 1, 1, 1}};
  CHECK(g.entries == expected);
  CHECK(basis_gram_table().entries == expected);
  CHECK(determinant(g.entries) == 256);
  CHECK(g.entries(0, 3) == 5);
  CHECK(g.basis_labels == clifford_basis_labels());
}

TEST_CASE("pairings through the forgetful reduction") {
  const auto b = clifford_basis();
  CHECK(euler_pairing_sigma(b[1], b[2]) == -3);
  CHECK(chi_cl0_forgetful(1, -1) == -3);
  CHECK(euler_pairing_sigma(cl0_sigma(), cl0_sigma()) == 1);
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) CHECK(Rat(chi_cl0_forgetful(x, y)) == euler_pairing_sigma(cl0_sigma(), cl0_sigma(x, y)));
}

TEST_CASE("self pairing agrees with the general pairing") {
  for (int i = 0; i < 200; ++i) {
    const ChernSigma e{test::random_rat(), test::random_rat(), test::random_rat(), test::random_rat()};
    CHECK(euler_self_pairing_sigma(e) == euler_pairing_sigma(e, e));
  }
}

TEST_CASE("rank and chi predicates") {
  CHECK_FALSE(rank_divisibility_check({2, 0, 0, 0}));
  CHECK(rank_divisibility_check({8, 1, 0, 0}));
  CHECK_THROWS_AS(rank_divisibility_check({Rat(1, 2), 0, 0, 0}), InputError);
  CHECK(chi_bound_predicate(2));
  CHECK_FALSE(chi_bound_predicate(3));
}

TEST_CASE("pairing against Ra") {
  const auto [at0, slope] = pairing_against_ra({4, 1, 0, 1});
  CHECK(slope == 1);
  CHECK(at0 == Rat(1) + Rat(1, 2) - Rat(1));
}

TEST_CASE("rank 4 chi 2 obstruction, small box") {
  const Rank4Scan s = rank4_chi2_obstruction(10);
  CHECK(s.classes == 21 * 21 * 21);
  CHECK(s.chi_two > 0);
  CHECK(s.counterexamples == 0);
  CHECK(s.report.all_passed());
  CHECK_THROWS_AS(rank4_chi2_obstruction(0), InputError);
}

TEST_CASE("surface Bogomolov pipeline") {
  const BogomolovScan s = bogomolov_surface_scan(8, 5);
  CHECK(s.identity_failures == 0);
  CHECK(s.violations == 0);
  CHECK(s.report.all_passed());
  CHECK_THROWS_AS(bogomolov_surface_scan(6, 5), InputError);
}
