#include <doctest.h>

#include <algorithm>

#include "../support.hpp"
#include "kustab/error.hpp"
#include "kustab/lattice.hpp"

using namespace kustab;

TEST_CASE("construction validates the Gram matrix") {
  CHECK_THROWS_AS(IntegralLattice(IntMatrix{{1, 2}, {3, 1}}), InputError);
  try {
    IntegralLattice(IntMatrix{{1, 2}, {3, 1}});
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(IntegralLattice(IntMatrix(2, 3)), InputError);
  const IntegralLattice deg(IntMatrix{{0, 0}, {0, 2}});
  CHECK(deg.degenerate());
}

TEST_CASE("named lattices") {
  const IntegralLattice ls = build_named("Ls(1)");
  CHECK(ls.determinant() == 80);
  CHECK(ls.gram() == IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, -8, 0}, {0, 1, 0, -2}});
  CHECK(build_named("A1(2)^2").gram() == IntMatrix{{2, 0}, {0, 2}});
  CHECK(build_named("A1+A1").gram() == IntMatrix{{2, 0}, {0, 2}});
  const IntegralLattice e8 = lattice_e8_negative();
  CHECK(e8.determinant() == 1);
  CHECK(e8.negative_definite());
  CHECK(e8.even());
  const IntegralLattice l22 = build_named("Lambda22");
  CHECK(l22.rank() == 22);
  CHECK(l22.signature().positive == 2);
  CHECK(l22.signature().negative == 20);
  const IntegralLattice m = build_named("Mukai24-default");
  CHECK(m.rank() == 24);
  CHECK(abs(m.determinant()) == 1);
  CHECK(m.signature().positive == 4);
  CHECK_THROWS_AS(build_named("Ls(0)"), InputError);
  CHECK_THROWS_AS(build_named("Foo"), InputError);
}

TEST_CASE("pairing") {
  const IntegralLattice a = lattice_a1_squared();
  CHECK(a.square(a.basis_vector(0)) == 2);
  CHECK(a.pair({1, 0}, {0, 1}) == 0);
  const IntegralLattice u = lattice_u();
  const LatticeVector x{&u, {1, 0}}, y{&u, {0, 1}};
  CHECK(pair(x, y) == 1);
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(lattice_a1_squared()) == std::vector<Int>{2, 2});
  CHECK(discriminant_order(discriminant_group(lattice_a1_squared())) == 4);
  CHECK(discriminant_group(IntegralLattice(IntMatrix{{10}})) == std::vector<Int>{10});
  CHECK(discriminant_order(discriminant_group(lattice_ls(1))) == 80);
  CHECK(discriminant_group(lattice_u()).empty());
}

TEST_CASE("divisibility") {
  CHECK(divisibility(lattice_u(), {1, 0}) == 1);
  CHECK(divisibility(lattice_a1_squared(), {1, 1}) == 2);
  const MukaiEmbedding& m = mukai24_default();
  CHECK(m.ambient.square(m.lambda1) == 2);
  CHECK(m.ambient.pair(m.lambda1, m.lambda2) == 0);
  const IntVector h = m.vector(2, -1);
  const Complement perp = orthogonal_complement(m.ambient, {m.vector(1, 2)});
  Int g = 0;
  for (std::size_t k = 0; k < perp.embedding.rows(); ++k) g = gcd(g, m.ambient.pair(h, perp.embedding.row_vector(k)));
  CHECK(g == 5);
}

TEST_CASE("orthogonal complements") {
  const IntegralLattice l = build_named("U+A1");
  const Complement c = orthogonal_complement(l, {{1, 1, 0}});
  CHECK(c.lattice.rank() == 2);
  for (std::size_t k = 0; k < c.embedding.rows(); ++k) CHECK(l.pair(c.embedding.row_vector(k), {1, 1, 0}) == 0);
  const MukaiEmbedding& m = mukai24_default();
  const Complement prim = orthogonal_complement(m.ambient, {m.lambda1, m.lambda2});
  CHECK(prim.lattice.rank() == 22);
  CHECK(discriminant_order(discriminant_group(prim.lattice)) == 4);
}

TEST_CASE("enumeration of fixed squares") {
  const Enumeration e = enumerate_square(lattice_a1_squared(), 10, 5);
  CHECK(e.certified);
  CHECK(e.vectors == std::vector<IntVector>{{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}});
  CHECK(enumerate_square(lattice_a1_squared(), -2, 5).vectors.empty());
  const Enumeration roots = enumerate_square(lattice_e8_negative(), -2, 0);
  CHECK(roots.certified);
  CHECK(roots.vectors.size() == 240);
  const Enumeration u = enumerate_square(lattice_u(), 0, 3);
  CHECK_FALSE(u.certified);
  CHECK(std::find(u.vectors.begin(), u.vectors.end(), IntVector{2, 0}) != u.vectors.end());
  CHECK(std::find(u.vectors.begin(), u.vectors.end(), IntVector{0, 1}) != u.vectors.end());
}

TEST_CASE("Fincke-Pohst agrees with a box search on random definite forms") {
  int tested = 0;
  while (tested < 40) {
    const std::size_t n = static_cast<std::size_t>(test::uniform(1, 3));
    IntMatrix g = test::random_symmetric(n, -2, 2);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = static_cast<long>(test::uniform(3, 6));
    const IntegralLattice l(g);
    if (!l.positive_definite()) continue;
    ++tested;
    for (int s = 1; s <= 8; ++s) {
      const Enumeration e = enumerate_square(l, s, 0);
      REQUIRE(e.certified);
      CHECK(e.vectors == box_search_square(l, s, 6));
    }
  }
}

TEST_CASE("isotropy") {
  const IsotropyResult u = isotropic_exists(lattice_u(), 3);
  CHECK(u.status == SearchStatus::yes);
  CHECK(u.witness == IntVector{1, 0});
  CHECK(isotropic_exists(lattice_a1_squared(), 3).status == SearchStatus::no_certified);
  CHECK(isotropic_exists(IntegralLattice(IntMatrix{{2, 1}, {1, -2}}), 3).status == SearchStatus::no_certified);
  CHECK(isotropic_exists(build_named("U+A1(-1)"), 2).status == SearchStatus::yes);
}

TEST_CASE("binary isotropy closed form matches brute force") {
  for (int t = 0; t < 150; ++t) {
    const Int a = static_cast<long>(test::uniform(-12, 12));
    const Int b = static_cast<long>(test::uniform(-12, 12));
    const Int c = static_cast<long>(test::uniform(-12, 12));
    const auto w = binary_isotropic_vector(a, b, c);
    bool brute = false;
    for (long x = -60; x <= 60 && !brute; ++x)
      for (long y = -60; y <= 60; ++y)
        if ((x || y) && a * x * x + 2 * b * x * y + c * y * y == 0) {
          brute = true;
          break;
        }
    CHECK(w.has_value() == brute);
    if (w) CHECK(a * (*w)[0] * (*w)[0] + 2 * b * (*w)[0] * (*w)[1] + c * (*w)[1] * (*w)[1] == 0);
  }
}

TEST_CASE("hyperbolic planes") {
  const HyperbolicResult u = hyperbolic_plane_exists(lattice_u(), 2);
  CHECK(u.status == SearchStatus::yes);
  CHECK(u.witness->first == IntVector{1, 0});
  CHECK(u.witness->second == IntVector{0, 1});
  CHECK(hyperbolic_plane_exists(lattice_a1_squared(), 2).status == SearchStatus::no_certified);
  CHECK(hyperbolic_plane_exists(IntegralLattice(IntMatrix{{1, 0}, {0, -1}}), 2).status == SearchStatus::no_certified);
  const IntegralLattice l = build_named("U+A1(-1)");
  const HyperbolicResult h = hyperbolic_plane_exists(l, 2);
  REQUIRE(h.status == SearchStatus::yes);
  CHECK(l.square(h.witness->first) == 0);
  CHECK(l.square(h.witness->second) == 0);
  CHECK(l.pair(h.witness->first, h.witness->second) == 1);
}

TEST_CASE("hyperbolic partner") {
  const IntegralLattice l = build_named("U^2+A1(-1)");
  const auto w = hyperbolic_partner(l, {1, 0, 0, 0, 0});
  REQUIRE(w.has_value());
  CHECK(l.square(*w) == 0);
  CHECK(l.pair({1, 0, 0, 0, 0}, *w) == 1);
}

TEST_CASE("no (-2)-vectors in the period lattices") {
  for (std::int64_t s : {1, 3}) {
    const NegTwoCertificate c = neg_two_obstruction(s, 100);
    CHECK(c.symbolic);
    CHECK(c.found == 0);
    CHECK(c.enumerated == 201LL * 201 * 201);
    CHECK(c.report.all_passed());
  }
}

TEST_CASE("enumeration cap") {
  setenv("KU_STAB_MAX_ENUM", "100", 1);
  const Enumeration e = enumerate_square(lattice_u(), 0, 50);
  CHECK(e.bound_used < 50);
  unsetenv("KU_STAB_MAX_ENUM");
}

TEST_CASE("primitive part and printing") {
  CHECK(primitive_part({4, -6, 0}) == IntVector{2, -3, 0});
  CHECK(to_string(IntVector{1, -2}) == "[1, -2]");
}
