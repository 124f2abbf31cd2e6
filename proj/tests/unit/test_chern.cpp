#include <doctest.h>

#include "../support.hpp"
#include "kustab/chern.hpp"
#include "kustab/euler_sigma.hpp"

using namespace kustab;

namespace {

ChernY random_class() {
  return {test::random_rat(12), test::random_rat(12), test::random_rat(12), test::random_rat(12)};
}

}  // namespace

TEST_CASE("clifford twist") {
  const ChernY o = twist_cl0({1, 0, 0, 0});
  CHECK(o.ch0 == 1);
  CHECK(o.ch1 == 0);
  CHECK(o.ch2 == Rat(-1, 8));
  CHECK(*o.ch3 == 0);

  const ChernY cl0 = untwist_cl0({4, -4, 2, std::nullopt});
  CHECK(cl0.ch2 == Rat(5, 2));
  CHECK_FALSE(cl0.ch3.has_value());

  for (int i = 0; i < 200; ++i) {
    const ChernY e = random_class();
    CHECK(untwist_cl0(twist_cl0(e)) == e);
    CHECK(twist_cl0(untwist_cl0(e)) == e);
  }
}

TEST_CASE("beta twist follows the exponential series") {
  const ChernY e{1, 0, 0, 0};
  CHECK(beta_twist(e, 0) == e);
  const ChernY t = beta_twist(e, 1);
  CHECK(t == ChernY{1, -1, Rat(1, 2), Rat(-1, 6)});
  for (int i = 0; i < 100; ++i) {
    const ChernY x = random_class();
    const Rat b = test::random_rat(6);
    CHECK(beta_twist(x, b).ch1 == x.ch1 - b * x.ch0);
    CHECK(beta_twist(beta_twist(x, b), -b) == x);
  }
}

TEST_CASE("discriminant values") {
  CHECK(discriminant(to_twisted_class({4, -4, 2, std::nullopt})) == 0);
  CHECK(discriminant(to_twisted_class({4, -2, Rat(1, 2), std::nullopt})) == 0);
  CHECK(discriminant_y({0, 1, 0, 0}, DiscriminantForm::raw) == 2);
  CHECK(discriminant_y({0, 1, 0, 0}, DiscriminantForm::twisted) == 2);
  CHECK(discriminant_sigma({0, 1, 1, 0}) == 2);
}

TEST_CASE("discriminant properties on random classes") {
  for (int i = 0; i < 300; ++i) {
    const ChernY e = random_class();
    const Rat d = discriminant_y(e, DiscriminantForm::raw);
    CHECK(d == discriminant_y(e, DiscriminantForm::twisted));
    const Rat b = test::random_rat(8);
    CHECK(discriminant(beta_twist(twisted_class_of(e), b)) == discriminant(twisted_class_of(e)));

    const TwistedClass x = twisted_class_of(e);
    const TwistedClass y = twisted_class_of(random_class());
    CHECK(discriminant(x + y) + discriminant(x - y) == Rat(2) * discriminant(x) + Rat(2) * discriminant(y));

    if (!e.ch0.is_zero()) {
      const ExtRat m = slope_h(beta_twist(x, b));
      CHECK(m == ExtRat(slope_h(x).value() - b));
    }
  }
}

TEST_CASE("slope") {
  CHECK(slope_h(to_twisted_class({4, -4, 2, std::nullopt})) == ExtRat(Rat(-1)));
  CHECK(slope_h(to_twisted_class({4, -8, 8, std::nullopt})) == ExtRat(Rat(-2)));
  CHECK(slope_h(ChernY{0, 1, 0, 0}).is_infinite());
}

TEST_CASE("restriction to the quadric surface") {
  CHECK(restrict_to_sigma({1, 0, 0, 0}) == ChernSigma{1, 0, 0, 0});
  CHECK(restrict_to_sigma({0, 1, 3, 0}) == ChernSigma{0, 1, 1, 6});
  const ChernSigma cl0 = restrict_to_sigma(untwist_cl0({4, -4, 2, std::nullopt}));
  CHECK(cl0 == cl0_sigma());
}

TEST_CASE("surface discriminant identity") {
  for (int i = 0; i < 200; ++i) {
    const ChernSigma e{Rat(4 * test::uniform(1, 3)), static_cast<long>(test::uniform(-20, 20)),
                       static_cast<long>(test::uniform(-20, 20)), static_cast<long>(test::uniform(-20, 20))};
    CHECK(discriminant_sigma(e) / Rat(4) == e.rk * e.rk / Rat(16) - euler_self_pairing_sigma(e));
  }
}

TEST_CASE("integrality flag is advisory") {
  CHECK(looks_integral(ChernY{4, -4, Rat(5, 2), std::nullopt}));
  CHECK_FALSE(looks_integral(ChernY{Rat(1, 2), 0, 0, 0}));
  CHECK(to_string(ChernY{4, -4, 2, std::nullopt}) == "(4, -4, 2, ?)");
}
