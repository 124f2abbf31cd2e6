#include "kustab/euler_sigma.hpp"

#include "kustab/error.hpp"
#include "kustab/normal_forms.hpp"

namespace kustab {

ChernSigma line_bundle(const Int& x, const Int& y) { return {1, x, y, Int(x * y)}; }

ChernSigma twist(const ChernSigma& e, const Int& x, const Int& y) {
  const ChernSigma l = line_bundle(x, y);
  // (r + B + c)(1 + D + D^2/2): degree two picks up r D^2/2 + B.D
  return {e.rk, e.b1 + e.rk * l.b1, e.b2 + e.rk * l.b2,
          e.c + e.rk * l.c + Rat(kSigmaH1H2) * (e.b1 * l.b2 + e.b2 * l.b1)};
}

ChernSigma dual(const ChernSigma& e) { return {e.rk, -e.b1, -e.b2, e.c}; }

const std::vector<std::pair<int, int>>& cl0_summands() {
  static const std::vector<std::pair<int, int>> s = {{0, 0}, {-1, -1}, {-2, -1}, {-1, -2}};
  return s;
}

ChernSigma cl0_sigma(const Int& x, const Int& y) {
  ChernSigma out{0, 0, 0, 0};
  for (const auto& [dx, dy] : cl0_summands()) out = out + line_bundle(x + dx, y + dy);
  return out;
}

Rat euler_pairing_sigma(const ChernSigma& e, const ChernSigma& f) {
  const ChernSigma d = dual(e);
  const Rat top = d.rk * f.c + f.rk * d.c + Rat(kSigmaH1H2) * (d.b1 * f.b2 + d.b2 * f.b1);
  return top / Rat(4) - d.rk * f.rk / Rat(16);
}

Rat euler_self_pairing_sigma(const ChernSigma& e) {
  const Rat ch1_sq = Rat(2 * kSigmaH1H2) * e.b1 * e.b2;
  return -e.rk * e.rk / Rat(16) + (Rat(2) * e.rk * e.c - ch1_sq) / Rat(4);
}

Int chi_structure_sheaf(const Int& x, const Int& y) { return (x + 1) * (y + 1); }

Int chi_cl0_forgetful(const Int& x, const Int& y) {
  Int total = 0;
  for (const auto& [dx, dy] : cl0_summands()) total += chi_structure_sheaf(x + dx, y + dy);
  return total;
}

std::vector<ChernSigma> clifford_basis() {
  return {cl0_sigma(0, 0), cl0_sigma(-1, 0), cl0_sigma(0, -1), cl0_sigma(-1, -1)};
}

std::vector<std::string> clifford_basis_labels() { return {"Cl0", "Cl0(-h1)", "Cl0(-h2)", "Cl0(-h)"}; }

EulerMatrix basis_gram() {
  const auto basis = clifford_basis();
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Rat v = euler_pairing_sigma(basis[i], basis[j]);
      if (!v.is_integer()) throw std::logic_error("non-integral Euler pairing " + v.str());
      m(i, j) = v.num();
    }
  return {m, clifford_basis_labels()};
}

EulerMatrix basis_gram_table() {
  return {IntMatrix{{1, 1, 1, 5}, {1, 1, -3, 1}, {1, -3, 1, 1}, {5, 1, 1, 1}}, clifford_basis_labels()};
}

bool rank_divisibility_check(const ChernSigma& e) {
  if (!e.rk.is_integer()) throw InputError("rank must be an integer, got " + e.rk.str());
  return e.rk.num() % 4 == 0;
}

bool chi_bound_predicate(const Rat& chi_self) { return chi_self <= Rat(2); }

std::pair<Rat, Rat> pairing_against_ra(const ChernSigma& e) {
  const ChernSigma ra0{4, -2, -2, 0};
  const ChernSigma ra1{4, -2, -2, 1};
  const Rat at0 = euler_pairing_sigma(e, ra0);
  return {at0, euler_pairing_sigma(e, ra1) - at0};
}

Rank4Scan rank4_chi2_obstruction(int search_bound) {
  if (search_bound <= 0) throw InputError("search bound must be positive");
  Rank4Scan s;
  const long long n = search_bound;
  for (long long b1 = -n; b1 <= n; ++b1)
    for (long long b2 = -n; b2 <= n; ++b2)
      for (long long c = -n; c <= n; ++c) {
        ++s.classes;
        if (8 * c - 2 * b1 * b2 != 12) continue;
        ++s.chi_two;
        const ChernSigma e{4, b1, b2, c};
        const bool chi_ok = euler_self_pairing_sigma(e) == Rat(2) && euler_pairing_sigma(e, e) == Rat(2);
        const bool parity = ((b1 - b2) % 2) != 0;
        const auto [at0, slope] = pairing_against_ra(e);
        // half-integral for every c' iff the c'-coefficient is integral and the constant is not
        const bool half = slope.is_integer() && !at0.is_integer() && (Rat(2) * at0).is_integer();
        if (!(chi_ok && parity && half)) {
          ++s.counterexamples;
          s.report.add("rank4.counterexample", "(b1,b2,c) = (" + std::to_string(b1) + "," + std::to_string(b2) + "," +
                                                   std::to_string(c) + ") escapes the parity obstruction",
                       false, "chi(E,Ra) = " + at0.str() + " + " + slope.str() + " c'");
        }
      }
  s.report.title = "rank 4, chi = 2 obstruction, box " + std::to_string(search_bound);
  s.report.add("rank4.scan", "no rank 4 class with chi(E,E) = 2 survives both parity tests", s.counterexamples == 0,
               std::to_string(s.classes) + " classes, " + std::to_string(s.chi_two) + " with chi = 2, " +
                   std::to_string(s.counterexamples) + " counterexamples");
  return s;
}

BogomolovScan bogomolov_surface_scan(int rank, int bound) {
  if (bound <= 0) throw InputError("bound must be positive");
  if (rank < 4 || rank % 4 != 0) throw InputError("rank must be a positive multiple of 4");
  BogomolovScan s;
  s.report.title = "surface Bogomolov pipeline, rank " + std::to_string(rank) + ", box " + std::to_string(bound);
  const Rat rk(rank);
  const Rat rk_term = rk * rk / Rat(16);
  for (int b1 = -bound; b1 <= bound; ++b1)
    for (int b2 = -bound; b2 <= bound; ++b2)
      for (int c = -bound; c <= bound; ++c) {
        ++s.classes;
        const ChernSigma e{rk, b1, b2, c};
        const Rat chi = euler_self_pairing_sigma(e);
        const Rat delta = discriminant_sigma(e);
        if (delta / Rat(4) != rk_term - chi) ++s.identity_failures;
        if (!chi.is_integer() || !chi_bound_predicate(chi) || (rank == 4 && chi == Rat(2))) continue;
        ++s.admissible;
        if (delta.sign() < 0) {
          ++s.violations;
          s.report.add("bogomolov.violation", "Delta >= 0 for " + to_string(e), false, "Delta = " + delta.str());
        }
      }
  s.report.add("bogomolov.identity", "Delta/4 = rk^2/16 - chi(E,E) on every class", s.identity_failures == 0,
               std::to_string(s.classes) + " classes, " + std::to_string(s.identity_failures) + " failures");
  s.report.add("bogomolov.nonnegative", "Delta >= 0 on every admissible class", s.violations == 0,
               std::to_string(s.admissible) + " admissible, " + std::to_string(s.violations) + " violations");
  return s;
}

}  // namespace kustab
