#include <doctest.h>

#include "kustab/error.hpp"
#include "kustab/k3.hpp"

using namespace kustab;

TEST_CASE("period divisor labels") {
  const PeriodDivisorLabel ten = d_label(10);
  CHECK(ten.status == DivisorStatus::split);
  CHECK(ten.components == std::vector<std::string>{"D'_10", "D''_10"});
  CHECK(d_label(8).status == DivisorStatus::single);
  CHECK(d_label(12).status == DivisorStatus::single);
  CHECK(d_label(3).status == DivisorStatus::invalid);
  CHECK(d_label(6).status == DivisorStatus::invalid);
  CHECK_THROWS_AS(d_label(0), InputError);
}

TEST_CASE("primes 3 mod 4 to even powers") {
  CHECK(star_star_prime(10).holds);
  CHECK_FALSE(star_star_prime(12).holds);
  CHECK(star_star_prime(9).holds);
  CHECK(star_star_prime(1).holds);
  CHECK_FALSE(star_star_prime(21).holds);
  CHECK(star_star_prime(98).holds);
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("associated K3 criteria") {
  const CriterionResult tw = twisted_k3_criterion(lattice_a1_squared(), 200);
  CHECK(tw.status == SearchStatus::no_certified);
  CHECK(tw.note == kSublatticeNote);
  const CriterionResult u = untwisted_k3_criterion(lattice_u(), 10);
  CHECK(u.status == SearchStatus::yes);
  CHECK(u.witness.size() == 2);
  const CriterionResult ls = twisted_k3_criterion(lattice_ls(1), 5);
  CHECK(ls.status == SearchStatus::yes);
  CHECK(lattice_ls(1).square(ls.witness.front()) == 0);
}

TEST_CASE("positive 2-planes") {
  const EtaVector eta{lattice_a1_squared(), {1, 0}, {0, 1}};
  CHECK(in_P(eta));
  const P0Result r = in_P0(eta, 10);
  CHECK(r.status == Membership::in_certified);
  CHECK(r.complement_rank == 0);

  const EtaVector neg{lattice_a1_squared(), {1, 0}, {2, 0}};
  CHECK_FALSE(in_P(neg));

  const IntegralLattice l = build_named("A1^2+A1(-1)");
  const P0Result hit = in_P0({l, {1, 0, 0}, {0, 1, 0}}, 5);
  CHECK(hit.status == Membership::not_in);
  REQUIRE(hit.obstruction.has_value());
  CHECK(l.square(*hit.obstruction) == -2);

  const IntegralLattice l8 = direct_sum(lattice_a1_squared(), IntegralLattice(IntMatrix{{-8}}));
  CHECK(in_P0({l8, {1, 0, 0}, {0, 1, 0}}, 5).status == Membership::in_certified);
  CHECK(in_P0({l8, {1, 0, 0}, {0, Rat(1, 2), 0}}, 5).status == Membership::in_certified);
}

TEST_CASE("period obstruction for 32 | d") {
  for (std::int64_t s = 1; s <= 50; ++s) {
    const Report r = period_obstruction(32 * s, 20);
    const bool star = star_star_prime(32 * s).holds;
    if (star) CHECK(r.all_passed());
    else CHECK_FALSE(r.all_passed());
  }
}
