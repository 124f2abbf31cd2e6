#include <doctest.h>

#include "../support.hpp"
#include "kustab/error.hpp"
#include "kustab/normal_forms.hpp"

using namespace kustab;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(Int(3), Int(-6)).str() == "-1/2");
  CHECK(Rat(119, 6) - Rat(8) * Rat(83, 48) == Rat(6));
  CHECK(Rat(6).str() == "6");
  CHECK_THROWS_AS(Rat(1) / Rat(0), InputError);
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), InputError);
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("13/6") == Rat(13, 6));
  CHECK(Rat::parse("-5/4") == Rat(-5, 4));
  CHECK(Rat::parse("4/8").str() == "1/2");
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse("0.5"), InputError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), InputError);
  CHECK_THROWS_AS(Rat::parse(""), InputError);
  CHECK_THROWS_AS(parse_int("12x"), InputError);
}

TEST_CASE("field axioms on random triples") {
  for (int i = 0; i < 500; ++i) {
    const Rat a = test::random_rat(), b = test::random_rat(), c = test::random_rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rat(0));
    if (!a.is_zero()) CHECK(a * (Rat(1) / a) == Rat(1));
    CHECK(a.den() > 0);
    CHECK(gcd(a.num(), a.den()) == 1);
  }
}

TEST_CASE("perfect squares") {
  CHECK(perfect_square(256) == Int(16));
  CHECK_FALSE(perfect_square(80).has_value());
  CHECK(perfect_square(0) == Int(0));
  CHECK_FALSE(perfect_square(-4).has_value());
  CHECK(isqrt(Int(99)) == 9);
}

TEST_CASE("gaussian rationals") {
  const GaussRat i{0, 1};
  CHECK(i * i == GaussRat{-1, 0});
  const GaussRat z{3, Rat(-1, 2)};
  CHECK(z.times_i() == i * z);
  CHECK(z * z.conj() == GaussRat{Rat(37, 4), 0});
}

TEST_CASE("extended rationals order +infinity last") {
  CHECK(ExtRat(Rat(5)) < ExtRat::infinity());
  CHECK(ExtRat::infinity() == ExtRat::infinity());
  CHECK(ExtRat::infinity().str() == "+inf");
  CHECK(ExtRat(Rat(-1, 2)) < ExtRat(Rat(0)));
}

TEST_CASE("determinants and Smith invariants") {
  CHECK(determinant(IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, -8, 0}, {0, 1, 0, -2}}) == 80);
  CHECK(smith_invariants(IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, -8, 0}, {0, 1, 0, -2}}) ==
        std::vector<Int>{1, 1, 2, 40});
  CHECK(smith_invariants(IntMatrix{{0, 0}, {0, 0}}).empty());
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(test::uniform(1, 5));
    const IntMatrix m = test::random_int_matrix(n, n, -9, 9);
    const Int d = determinant(m);
    CHECK(determinant(to_rational(m)) == Rat(d));
    const auto inv = smith_invariants(m);
    if (d == 0) {
      CHECK(inv.size() < n);
    } else {
      Int p = 1;
      for (std::size_t k = 0; k < inv.size(); ++k) {
        p *= inv[k];
        if (k > 0) CHECK(inv[k] % inv[k - 1] == 0);
      }
      CHECK(p == abs(d));
    }
  }
}

TEST_CASE("integer kernels are saturated and canonical") {
  const IntMatrix m{{2, 4, 6}};
  const IntMatrix k = integer_kernel(m);
  REQUIRE(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(kustab::apply(m, k.row_vector(i))[0] == 0);
  CHECK(smith_invariants(k) == std::vector<Int>{1, 1});
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = test::random_int_matrix(2, 4, -6, 6);
    const IntMatrix ker = integer_kernel(a);
    for (std::size_t i = 0; i < ker.rows(); ++i) CHECK(kustab::apply(a, ker.row_vector(i)) == IntVector{0, 0});
    for (const auto& s : smith_invariants(ker)) CHECK(s == 1);
    CHECK(row_hermite(ker) == ker);
  }
}

TEST_CASE("unimodular completion and unit pairing") {
  for (int t = 0; t < 100; ++t) {
    IntVector v;
    for (int i = 0; i < 4; ++i) v.push_back(static_cast<long>(test::uniform(-20, 20)));
    if (content(v) == 0) continue;
    const IntMatrix u = unimodular_to_first_axis(v);
    CHECK(abs(determinant(u)) == 1);
    const IntVector image = kustab::apply(u, v);
    CHECK(image[0] == content(v));
    for (std::size_t i = 1; i < image.size(); ++i) CHECK(image[i] == 0);
    if (content(v) == 1) {
      const auto x = solve_unit_pairing(v);
      REQUIRE(x.has_value());
      Int s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * (*x)[i];
      CHECK(s == 1);
    }
  }
  CHECK_FALSE(solve_unit_pairing({2, 4}).has_value());
}

TEST_CASE("inverse and signature") {
  const RatMatrix m = to_rational(IntMatrix{{2, 1}, {1, -2}});
  CHECK(m * inverse(m) == RatMatrix::identity(2));
  const Signature s = signature(m);
  CHECK(s.positive == 1);
  CHECK(s.negative == 1);
  CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), InputError);
}
