#include <doctest.h>

#include <array>

#include "../support.hpp"
#include "kustab/error.hpp"
#include "kustab/mutation.hpp"
#include "kustab/normal_forms.hpp"

using namespace kustab;

namespace {

using Ch = std::array<Rat, 4>;

Ch mul(const Ch& a, const Ch& b) {
  Ch out{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Ch line(int n) { return {1, n, Rat(n * n, 2), Rat(n * n * n, 6)}; }

// Hirzebruch-Riemann-Roch on the quadric threefold, h^3 = 2.
Rat chi_q3(const Ch& e, const Ch& f) {
  const Ch td{1, Rat(3, 2), Rat(13, 12), Rat(1, 2)};
  const Ch dual{e[0], -e[1], e[2], -e[3]};
  return Rat(2) * mul(mul(dual, f), td)[3];
}

EulerContext random_context() {
  const std::size_t n = static_cast<std::size_t>(test::uniform(2, 5));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = static_cast<long>(test::uniform(-6, 6));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("E" + std::to_string(i));
  return EulerContext(to_rational(m), labels);
}

}  // namespace

TEST_CASE("quadric threefold collection from Riemann-Roch") {
  const std::array<Ch, 4> coll{line(-1), line(0), Ch{2, 1, 0, Rat(-1, 12)}, line(1)};
  const EulerContext q3 = builtin_q3_context();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(chi_q3(coll[i], coll[j]) == q3.euler(i, j));
  CHECK(determinant(q3.euler) == 1);
  CHECK(q3.numerically_exceptional());
  CHECK(q3.semiorthogonal());
}

TEST_CASE("sigma context") {
  const EulerContext s = builtin_sigma_context();
  CHECK(chi(s, basis_class(s, 1), basis_class(s, 2)) == -3);
  CHECK(s.numerically_exceptional());
  CHECK_FALSE(s.semiorthogonal());
  CHECK(determinant(s.euler) == 256);
  CHECK_THROWS_AS(builtin_context("p2"), InputError);
}

TEST_CASE("basic mutations") {
  const EulerContext q3 = builtin_q3_context();
  const KClass l = left_mutate(q3, 0, basis_class(q3, 1));
  CHECK(l == KClass{-5, 1, 0, 0});
  const KClass r = right_mutate(q3, 3, basis_class(q3, 2));
  CHECK(chi(q3, r, basis_class(q3, 3)) == 0);
  const EulerContext bad(to_rational(IntMatrix{{2, 0}, {0, 1}}), {"A", "B"});
  CHECK_THROWS_AS(left_mutate(bad, 0, basis_class(bad, 1)), InputError);
}

TEST_CASE("orthogonal pairs mutate trivially") {
  const EulerContext c(to_rational(IntMatrix{{1, 0}, {0, 1}}), {"Cl0", "Cl1"});
  CHECK(left_mutate(c, 0, basis_class(c, 1)) == basis_class(c, 1));
  CHECK(right_mutate(c, 1, basis_class(c, 0)) == basis_class(c, 0));
}

TEST_CASE("scripts") {
  const auto steps = parse_script("L0,R2[1] L1[-1]");
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].left);
  CHECK(steps[1].position == 2);
  CHECK(steps[1].shift == 1);
  CHECK(steps[2].shift == -1);
  CHECK(to_string(steps[1]) == "R2[1]");
  CHECK(parse_script("").empty());
  CHECK_THROWS_AS(parse_script("X0"), InputError);
  CHECK_THROWS_AS(parse_script("L"), InputError);
  CHECK_THROWS_AS(parse_script("L0[1"), InputError);
  CHECK_THROWS_AS(mutate_collection(builtin_q3_context(), parse_script("L3")), InputError);
}

TEST_CASE("shift flips the sign of the mutated class") {
  const EulerContext q3 = builtin_q3_context();
  const EulerContext a = mutate_collection(q3, parse_script("L0"));
  const EulerContext b = mutate_collection(q3, parse_script("L0[1]"));
  for (std::size_t j = 0; j < 4; ++j) CHECK(a.classes(0, j) == -b.classes(0, j));
  CHECK(a.classes.row_vector(1) == b.classes.row_vector(1));
  CHECK(b.labels[0] == "L_O(-h)(O)[1]");
}

TEST_CASE("random semiorthogonal contexts") {
  for (int t = 0; t < 200; ++t) {
    const EulerContext c = random_context();
    REQUIRE(c.numerically_exceptional());
    REQUIRE(c.semiorthogonal());
    const std::size_t i = static_cast<std::size_t>(test::uniform(0, static_cast<std::int64_t>(c.size()) - 2));
    const int shift = static_cast<int>(test::uniform(0, 1));
    for (bool left : {true, false}) {
      const EulerContext m = mutate_collection(c, {{left, i, shift}});
      CHECK(determinant(m.euler).abs() == determinant(c.euler).abs());
      CHECK(m.numerically_exceptional());
      CHECK(m.semiorthogonal());
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
          CHECK(m.euler(a, b) == chi(c, m.classes.row_vector(a), m.classes.row_vector(b)));
    }
    const EulerContext back = mutate_collection(c, {{true, i, 0}, {false, i, 0}});
    CHECK(back.euler == c.euler);
    CHECK(back.classes == c.classes);
    const EulerContext back2 = mutate_collection(c, {{false, i, 0}, {true, i, 0}});
    CHECK(back2.classes == c.classes);
  }
}
