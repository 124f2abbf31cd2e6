#include "kustab/reproduction.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "kustab/chern.hpp"
#include "kustab/euler_sigma.hpp"
#include "kustab/k3.hpp"
#include "kustab/lattice.hpp"
#include "kustab/moduli.hpp"
#include "kustab/mutation.hpp"
#include "kustab/tilt.hpp"

namespace kustab {

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::pass:
      return "pass";
    case ItemStatus::fail:
      return "fail";
    case ItemStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

struct Outcome {
  bool ok;
  std::string details;
};

struct Entry {
  std::string id;
  std::string location;
  std::vector<std::string> tags;
  std::function<Outcome()> run;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const ChernY kCl0Twisted{4, -4, 2, std::nullopt};
const ChernY kRaTwisted{4, -2, Rat(1, 2), std::nullopt};

Report heart_at(const Rat& alpha_sq, const Rat& beta) { return verify_heart_window(TiltParams(alpha_sq, beta)); }

Outcome checks_pass(const Report& r, const std::vector<std::string>& ids) {
  Outcome o{true, {}};
  for (const auto& id : ids) {
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.id == id; });
    if (it == r.checks.end()) {
      o.ok = false;
      o.details += id + ": missing; ";
      continue;
    }
    o.ok = o.ok && it->passed;
    o.details += it->statement + " [" + it->detail + "] " + (it->passed ? "holds" : "fails") + "; ";
  }
  return o;
}

Outcome family(const MukaiVector& v, int dim, int deg, int div, const std::string& label) {
  const ModuliReport r = family_invariants(v);
  const bool ok = r.dimension == dim && r.degree == deg && r.divisibility == div &&
                  r.lattice_divisibility == div && r.label == label;
  return {ok, "dim " + r.dimension.get_str() + ", deg " + r.degree.get_str() + ", div " + r.divisibility.get_str() +
                  " (lattice " + r.lattice_divisibility.get_str() + "), label \"" + r.label + "\""};
}

std::vector<Entry> registry() {
  std::vector<Entry> s;

  s.push_back({"chern.delta.cl0", "exceptional characters on the quadric threefold", {"chern", "discriminant"}, [] {
                 const Rat d = discriminant(to_twisted_class(kCl0Twisted));
                 return Outcome{d.is_zero(), "Delta(4 - 4h + 2h^2) = " + d.str()};
               }});
  s.push_back({"chern.delta.ra", "exceptional characters on the quadric threefold", {"chern", "discriminant"}, [] {
                 const Rat d = discriminant(to_twisted_class(kRaTwisted));
                 return Outcome{d.is_zero(), "Delta(4 - 2h + 1/2 h^2) = " + d.str()};
               }});
  s.push_back({"chern.delta.surface-identity", "surface Bogomolov inequality, proof", {"chern", "sigma", "discriminant"},
               [] {
                 const BogomolovScan b = bogomolov_surface_scan(4, 6);
                 return Outcome{b.identity_failures == 0, "Delta/4 = rk^2/16 - chi(E,E) on " +
                                                              std::to_string(b.classes) + " rank 4 classes, " +
                                                              std::to_string(b.identity_failures) + " failures"};
               }});
  s.push_back({"chern.mu-h.cl0", "slope chain of the exceptional sheaves", {"chern", "slope"}, [] {
                 const ExtRat m = slope_h(to_twisted_class(kCl0Twisted));
                 return Outcome{m == ExtRat(Rat(-1)), "mu_h(Cl0) = " + m.str()};
               }});
  s.push_back({"chern.mu-h.cl1-twisted", "slope chain of the exceptional sheaves", {"chern", "slope"}, [] {
                 const ExtRat m = slope_h(exceptional("Cl1(-h)").twisted);
                 return Outcome{m == ExtRat(Rat(-2)), "mu_h(Cl1(-h)) = " + m.str()};
               }});

  s.push_back({"tilt.order.serre", "double-tilt slope orderings, proof", {"tilt", "slope"}, [] {
                 return checks_pass(heart_at(Rat(1, 32), kDoubleTiltBeta),
                                    {"double-tilt.serre-equal", "double-tilt.serre-order", "double-tilt.serre-negative"});
               }});
  s.push_back({"tilt.order.positive", "double-tilt slope orderings, proof", {"tilt", "slope"}, [] {
                 return checks_pass(heart_at(Rat(1, 32), kDoubleTiltBeta),
                                    {"double-tilt.positive", "double-tilt.equal", "double-tilt.order"});
               }});
  s.push_back({"tilt.table.cl0", "twisted characters of the exceptional sheaves", {"tilt", "table"}, [] {
                 const ChernY& c = exceptional("Cl0").twisted_ch;
                 return Outcome{c.ch0 == 4 && c.ch1 == -4 && c.ch2 == 2, "Cl0 -> " + to_string(c)};
               }});
  s.push_back({"tilt.table.rb-cl1", "twisted characters of the exceptional sheaves", {"tilt", "table"}, [] {
                 const ChernY& c = exceptional("Rb*Cl1(-h)").twisted_ch;
                 return Outcome{c.ch0 == 4 && c.ch1 == -6 && c.ch2 == Rat(9, 2), "Rb*Cl1(-h) -> " + to_string(c)};
               }});
  s.push_back({"tilt.table.delta-zero", "twisted characters of the exceptional sheaves", {"tilt", "table", "discriminant"},
               [] {
                 Outcome o{true, {}};
                 for (const auto& e : exceptional_table()) {
                   const Rat d = discriminant(e.twisted);
                   o.ok = o.ok && d.is_zero();
                   o.details += e.name + ": " + d.str() + "; ";
                 }
                 return o;
               }});
  s.push_back({"tilt.window.pass", "double-tilt parameter window", {"tilt", "heart"}, [] {
                 const Report r = heart_at(Rat(1, 32), kDoubleTiltBeta);
                 return Outcome{r.all_passed(), std::to_string(r.checks.size()) + " checks at alpha^2 = 1/32, beta = -5/4, " +
                                                    std::to_string(r.failures().size()) + " failures"};
               }});
  s.push_back({"tilt.window.beta-edge", "tilted heart containment range", {"tilt", "heart"}, [] {
                 const Report r = heart_at(Rat(1, 32), Rat(-1));
                 const bool noted = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
                   return n.find("outside [-3/2, -1)") != std::string::npos;
                 });
                 const auto f = r.failures();
                 const bool contain_fail = std::any_of(f.begin(), f.end(), [](const Check& c) {
                   return c.id.rfind("coh-beta.", 0) == 0;
                 });
                 return Outcome{noted && contain_fail, "beta = -1 out-of-window note: " + yes_no(noted) +
                                                           ", containment failure reported: " + yes_no(contain_fail)};
               }});
  s.push_back({"tilt.charge.limit", "central charges of lambda_1, lambda_2", {"tilt", "charge"}, [] {
                 const GaussRat z = ku_charge(Rat(0), {1, 0});
                 return Outcome{z == GaussRat{24, Rat(119, 6)}, "Z_0(lambda_1) = " + z.str()};
               }});
  s.push_back({"tilt.charge.independence", "linear independence of the central charges", {"tilt", "charge"}, [] {
                 Outcome o{true, {}};
                 for (const Rat& a : {Rat(1, 64), Rat(1, 32), Rat(1, 20), Rat(15, 256)}) {
                   const Rat d = charge_independence_determinant(a);
                   o.ok = o.ok && !d.is_zero();
                   o.details += "alpha^2 = " + a.str() + ": det " + d.str() + "; ";
                 }
                 return o;
               }});

  s.push_back({"sigma.chi.h1-h2", "Euler pairing on the quadric surface, proof", {"sigma", "euler"}, [] {
                 const auto b = clifford_basis();
                 const Rat direct = euler_pairing_sigma(b[1], b[2]);
                 const Int reduced = chi_cl0_forgetful(1, -1);
                 return Outcome{direct == -3 && reduced == -3,
                                "direct " + direct.str() + ", via chi(Cl0, Cl0(h1 - h2)) " + reduced.get_str()};
               }});
  s.push_back({"sigma.chi.self", "Euler pairing on the quadric surface, proof", {"sigma", "euler"}, [] {
                 const Rat c = euler_pairing_sigma(cl0_sigma(), cl0_sigma());
                 return Outcome{c == 1, "chi(Cl0, Cl0) = " + c.str()};
               }});
  s.push_back({"sigma.matrix.determinant", "Euler matrix of the Clifford basis", {"sigma", "gram"}, [] {
                 const EulerMatrix g = basis_gram();
                 const Int d = determinant(g.entries);
                 const bool same = g.entries == basis_gram_table().entries;
                 return Outcome{d == 256 && same, "det = " + d.get_str() + ", matches table: " + yes_no(same)};
               }});
  s.push_back({"sigma.matrix.entry", "Euler matrix of the Clifford basis", {"sigma", "euler"}, [] {
                 const Int e = basis_gram().entries(0, 3);
                 return Outcome{e == 5, "entry (1,4) = " + e.get_str()};
               }});
  s.push_back({"sigma.rank.two", "rank constraint on Clifford module classes", {"sigma", "rank"}, [] {
                 const bool r = rank_divisibility_check({2, 0, 0, 0});
                 return Outcome{!r, "rank 2 admissible: " + yes_no(r)};
               }});
  s.push_back({"sigma.chi.bound", "Euler characteristic bound on the surface", {"sigma", "rank"}, [] {
                 const bool r = chi_bound_predicate(2);
                 return Outcome{r, "chi = 2 within bound: " + yes_no(r)};
               }});
  s.push_back({"sigma.rank4.obstruction", "parity obstruction for rank 4, chi = 2", {"sigma", "obstruction"}, [] {
                 const Rank4Scan r = rank4_chi2_obstruction(50);
                 return Outcome{r.counterexamples == 0, r.report.checks.back().detail};
               }});

  s.push_back({"lattice.a1-squared.pairing", "canonical A1^2 sublattice", {"lattice"}, [] {
                 const IntegralLattice l = lattice_a1_squared();
                 const Int p = l.square(l.basis_vector(0));
                 return Outcome{p == 2, "(lambda_1, lambda_1) = " + p.get_str()};
               }});
  s.push_back({"lattice.a1-scaled.gram", "canonical A1^2 sublattice", {"lattice"}, [] {
                 const IntegralLattice l = build_named("A1(2)^2");
                 return Outcome{l.gram() == IntMatrix{{2, 0}, {0, 2}}, "A1(2)^2 has Gram diag(2, 2): " +
                                                                           yes_no(l.gram() == IntMatrix{{2, 0}, {0, 2}})};
               }});
  s.push_back({"lattice.discriminant.polarization", "divisibility of the polarization", {"lattice", "discriminant"}, [] {
                 const auto g = discriminant_group(IntegralLattice(IntMatrix{{10}}));
                 return Outcome{g == std::vector<Int>{10}, "Z/" + (g.empty() ? std::string("1") : g[0].get_str())};
               }});
  s.push_back({"lattice.divisibility.ambient", "divisibility of the polarization", {"lattice", "moduli"}, [] {
                 const Int g = lattice_divisibility({1, 2});
                 return Outcome{g == 5, "div(h) in v-perp for v = (1,2): " + g.get_str()};
               }});

  s.push_back({"k3.label.10", "components of the period divisors", {"k3", "label"}, [] {
                 const PeriodDivisorLabel l = d_label(10);
                 return Outcome{l.status == DivisorStatus::split && l.components.size() == 2,
                                to_string(l.status) + ": " + l.components.front() + ", " + l.components.back()};
               }});
  s.push_back({"k3.label.8", "components of the period divisors", {"k3", "label"}, [] {
                 const PeriodDivisorLabel l = d_label(8);
                 return Outcome{l.status == DivisorStatus::single, to_string(l.status)};
               }});
  s.push_back({"k3.label.3", "components of the period divisors", {"k3", "label"}, [] {
                 const PeriodDivisorLabel l = d_label(3);
                 return Outcome{l.status == DivisorStatus::invalid, to_string(l.status)};
               }});
  s.push_back({"k3.twisted.very-general", "very general lattice of the Kuznetsov component", {"k3", "criterion"}, [] {
                 const CriterionResult r = twisted_k3_criterion(lattice_a1_squared(), 200);
                 return Outcome{r.status == SearchStatus::no_certified, to_string(r.status) + " via " + r.method};
               }});
  s.push_back({"k3.p0.very-general", "stability conditions on the very general component", {"k3", "period"}, [] {
                 const P0Result r = in_P0({lattice_a1_squared(), {1, 0}, {0, 1}}, 50);
                 return Outcome{r.status == Membership::in_certified, to_string(r.status)};
               }});
  s.push_back({"k3.period.32", "isotropic classes in the period divisors", {"k3", "period"}, [] {
                 Outcome o{true, {}};
                 for (std::int64_t sv = 1; sv <= 5; ++sv) {
                   const NegTwoCertificate c = neg_two_obstruction(sv, 20);
                   o.ok = o.ok && c.symbolic && c.found == 0;
                 }
                 o.details = "A1^2 + <-8s> has no (-2)-vectors for s <= 5, symbolic and to bound 20";
                 return o;
               }});

  s.push_back({"moduli.dimension.zero", "nonemptiness of the moduli spaces", {"moduli", "dimension"}, [] {
                 const auto d = moduli_dimension(0);
                 return Outcome{d && *d == 2, d ? d->get_str() : "empty"};
               }});
  s.push_back({"moduli.dimension.minus-two", "nonemptiness of the moduli spaces", {"moduli", "dimension"}, [] {
                 const auto d = moduli_dimension(-2);
                 return Outcome{d && *d == 0, d ? d->get_str() : "empty"};
               }});
  s.push_back({"moduli.dimension.minus-four", "nonemptiness of the moduli spaces", {"moduli", "dimension"}, [] {
                 const auto d = moduli_dimension(-4);
                 return Outcome{!d, d ? d->get_str() : "empty"};
               }});
  s.push_back({"moduli.family.1-0", "double EPW sextic example", {"moduli", "family"},
               [] { return family({1, 0}, 4, 2, 1, "double EPW sextic"); }});
  s.push_back({"moduli.family.1-1", "EPW cube example", {"moduli", "family"},
               [] { return family({1, 1}, 6, 4, 2, "EPW cube"); }});
  s.push_back({"moduli.family.1-2", "hyperkahler 12-fold example", {"moduli", "family"},
               [] { return family({1, 2}, 12, 10, 5, "12-fold (point projections)"); }});
  s.push_back({"moduli.involution.1-2", "anti-symplectic involution criterion", {"moduli", "involution"}, [] {
                 const Involution inv = involution_exists({1, 2});
                 const Int r = (inv.witness * inv.witness + 1) % inv.modulus;
                 return Outcome{inv.modulus == 5 && inv.witness == 2 && r == 0,
                                "m = " + inv.modulus.get_str() + ", t = " + inv.witness.get_str()};
               }});

  s.push_back({"mutate.sigma.pair", "Euler pairing on the quadric surface, proof", {"mutate", "euler"}, [] {
                 const EulerContext c = builtin_sigma_context();
                 const Rat v = chi(c, basis_class(c, 1), basis_class(c, 2));
                 return Outcome{v == -3, "chi(" + c.labels[1] + ", " + c.labels[2] + ") = " + v.str()};
               }});
  s.push_back({"mutate.sigma.exceptional", "self-pairing of the Clifford basis", {"mutate", "euler"}, [] {
                 const EulerContext c = builtin_sigma_context();
                 return Outcome{c.numerically_exceptional(), "chi(E,E) = 1 on every basis class: " +
                                                                 yes_no(c.numerically_exceptional())};
               }});
  s.push_back({"mutate.orthogonal.trivial", "complete orthogonality of Cl0 and Cl1", {"mutate"}, [] {
                 const EulerContext c(to_rational(IntMatrix{{1, 0}, {0, 1}}), {"Cl0", "Cl1"});
                 const EulerContext l = mutate_collection(c, {{true, 0, 0}});
                 const EulerContext r = mutate_collection(c, {{false, 0, 0}});
                 const bool ok = l.classes.row_vector(0) == basis_class(c, 1) &&
                                 r.classes.row_vector(1) == basis_class(c, 0);
                 return Outcome{ok, "L and R mutations return the unchanged classes: " + yes_no(ok)};
               }});

  std::sort(s.begin(), s.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return s;
}

}  // namespace

std::vector<VerificationItem> verify_paper(const std::optional<std::string>& filter) {
  std::vector<VerificationItem> out;
  for (const Entry& sp : registry()) {
    if (filter && std::find(sp.tags.begin(), sp.tags.end(), *filter) == sp.tags.end()) continue;
    VerificationItem it{sp.id, sp.location, sp.tags, ItemStatus::fail, {}};
    try {
      const Outcome o = sp.run();
      it.status = o.ok ? ItemStatus::pass : ItemStatus::fail;
      it.details = o.details;
    } catch (const std::exception& e) {
      it.status = ItemStatus::inconclusive;
      it.details = std::string("error: ") + e.what();
    }
    out.push_back(std::move(it));
  }
  return out;
}

std::vector<std::string> verification_tags() {
  std::set<std::string> tags;
  for (const Entry& sp : registry()) tags.insert(sp.tags.begin(), sp.tags.end());
  return {tags.begin(), tags.end()};
}

}  // namespace kustab
