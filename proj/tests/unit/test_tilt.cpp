#include <doctest.h>

#include <algorithm>

#include "../support.hpp"
#include "kustab/error.hpp"
#include "kustab/limits.hpp"
#include "kustab/tilt.hpp"

using namespace kustab;

namespace {

const TiltParams kStd(Rat(1, 32), Rat(-5, 4));

bool passed(const Report& r, const std::string& id) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.id == id; });
  REQUIRE(it != r.checks.end());
  return it->passed;
}

}  // namespace

TEST_CASE("central charge on simple classes") {
  const GaussRat z = z_first(kStd, exceptional("Cl0").twisted);
  CHECK(z == GaussRat{Rat(1, 8) - Rat(1, 4), 2});
  CHECK(z.im > 0);
  const TwistedClass pt{0, 0, -2};
  for (const Rat& a : {Rat(1, 7), Rat(3)})
    for (const Rat& b : {Rat(0), Rat(-5, 4), Rat(2)}) CHECK(z_first(TiltParams(a, b), pt) == GaussRat{2, 0});
}

TEST_CASE("charges are linear and Z0 is a rotation") {
  for (int i = 0; i < 100; ++i) {
    const TwistedClass v{test::random_rat(), test::random_rat(), test::random_rat()};
    const TwistedClass w{test::random_rat(), test::random_rat(), test::random_rat()};
    const Rat t = test::random_rat();
    const TiltParams p(test::random_rat().abs() + Rat(1, 100), test::random_rat());
    CHECK(z_first(p, v + w) == z_first(p, v) + z_first(p, w));
    CHECK(z_first(p, t * v) == t * z_first(p, v));
    const GaussRat z = z_first(p, v);
    const GaussRat z0 = z_second(p, v);
    CHECK(z0.re == z.im);
    CHECK(z0.im == -z.re);
  }
}

TEST_CASE("tilt parameters reject nonpositive alpha squared") {
  CHECK_THROWS_AS(TiltParams(Rat(0), Rat(-1)), InputError);
  CHECK_THROWS_AS(TiltParams(Rat(-1, 4), Rat(-1)), InputError);
}

TEST_CASE("slope is +inf on the real axis") {
  CHECK(tilt_slope(kStd, TwistedClass{0, 0, -2}, Tilt::first).is_infinite());
}

TEST_CASE("exceptional table") {
  const auto& t = exceptional_table();
  REQUIRE(t.size() == 8);
  CHECK(exceptional("Cl0").twisted_ch == ChernY{4, -4, 2, std::nullopt});
  CHECK(exceptional("Rb*Cl1(-h)").twisted_ch == ChernY{4, -6, Rat(9, 2), std::nullopt});
  CHECK(exceptional("Ra").twisted_ch == ChernY{4, -2, Rat(1, 2), std::nullopt});
  CHECK(exceptional("Cl0(-h)").twisted_ch == ChernY{4, -8, 8, std::nullopt});
  for (const auto& e : t) {
    CHECK(discriminant(e.twisted) == 0);
    CHECK_FALSE(e.twisted_ch.ch3.has_value());
  }
  CHECK_THROWS_AS(exceptional("nope"), InputError);
}

TEST_CASE("heart window at the standard parameters") {
  const Report r = verify_heart_window(kStd);
  CHECK(r.all_passed());
  CHECK(r.notes.empty());
  CHECK(passed(r, "double-tilt.serre-equal"));
  CHECK(passed(r, "double-tilt.serre-order"));
  CHECK(passed(r, "double-tilt.positive"));
  CHECK(passed(r, "double-tilt.order"));
}

TEST_CASE("heart window over the sampled alpha squared") {
  for (const Rat& a : {Rat(1, 64), Rat(1, 32), Rat(1, 20), Rat(15, 256)})
    CHECK(verify_heart_window(TiltParams(a, kDoubleTiltBeta)).all_passed());
  const Report bad = verify_heart_window(TiltParams(1, kDoubleTiltBeta));
  CHECK_FALSE(bad.all_passed());
  CHECK_FALSE(passed(bad, "double-tilt.serre-negative"));
  CHECK_FALSE(bad.notes.empty());
}

TEST_CASE("beta outside the containment range is reported") {
  const Report r = verify_heart_window(TiltParams(Rat(1, 32), Rat(-1)));
  CHECK_FALSE(passed(r, "coh-beta.Cl0"));
  CHECK(std::any_of(r.notes.begin(), r.notes.end(),
                    [](const std::string& n) { return n.find("outside [-3/2, -1)") != std::string::npos; }));
  CHECK(verify_heart_window(TiltParams(Rat(1, 32), Rat(-3, 2))).notes.size() == 1);
}

TEST_CASE("charges of lambda_1 and lambda_2") {
  CHECK(ku_charge(0, {1, 0}) == GaussRat{24, Rat(119, 6)});
  CHECK(ku_charge(Rat(1, 32), {0, 1}) == GaussRat{-28, Rat(-247, 12)});
  CHECK(ku_charge(Rat(1, 5), {0, 0}) == GaussRat{0, 0});
  for (int i = 0; i < 50; ++i) {
    const Rat a = test::random_rat().abs();
    const MukaiVector v{test::uniform(-9, 9), test::uniform(-9, 9)};
    CHECK(ku_charge_closed_form(a, v) == ku_charge_from_characters(a, v));
    CHECK(ku_charge_closed_form(a, v) ==
          GaussRat{Rat(24 * v.a - 28 * v.b), Rat(v.a) * (Rat(119, 6) - Rat(8) * a) + Rat(v.b) * (Rat(8) * a - Rat(125, 6))});
  }
}

TEST_CASE("independence determinant") {
  for (const Rat& a : {Rat(1, 64), Rat(1, 32), Rat(1, 20), Rat(15, 256)}) CHECK_FALSE(charge_independence_determinant(a).is_zero());
  CHECK(charge_independence_determinant(Rat(83, 48)).is_zero());
}

TEST_CASE("wall scan") {
  const auto walls = wall_scan({1, 0}, 1);
  const auto it = std::find_if(walls.begin(), walls.end(), [](const WallSolution& w) { return w.destabilizer == MukaiVector{0, 1}; });
  REQUIRE(it != walls.end());
  CHECK(it->alpha_sq_root == Rat(83, 48));
  CHECK_FALSE(it->in_window);
  for (const auto& w : wall_scan({1, 0}, 2)) CHECK_FALSE(w.destabilizer == MukaiVector{2, 0});

  const MukaiVector v{1, 1};
  for (const auto& w : wall_scan(v, 3)) {
    REQUIRE(w.alpha_sq_root.has_value());
    const GaussRat zv = ku_charge_closed_form(*w.alpha_sq_root, v);
    const GaussRat zw = ku_charge_closed_form(*w.alpha_sq_root, w.destabilizer);
    CHECK((zw.conj() * zv).im == 0);
  }
  CHECK_THROWS_AS(wall_scan({2, 2}, 3), InputError);
  CHECK_THROWS_AS(wall_scan({1, 0}, 0), InputError);
}

TEST_CASE("wall scan honours the enumeration cap") {
  setenv("KU_STAB_MAX_ENUM", "10", 1);
  CHECK_THROWS_AS(wall_scan({1, 0}, 5), InputError);
  setenv("KU_STAB_MAX_ENUM", "abc", 1);
  CHECK_THROWS_AS(max_enum(), InputError);
  unsetenv("KU_STAB_MAX_ENUM");
  CHECK(max_enum() == kDefaultMaxEnum);
}
