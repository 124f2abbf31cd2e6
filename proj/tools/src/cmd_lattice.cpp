#include <memory>

#include "cli.hpp"
#include "kustab/k3.hpp"

namespace kustab::cli {

namespace {

Json lattice_summary(const IntegralLattice& l) {
  Json doc = to_json(l);
  doc["rank"] = l.rank();
  doc["determinant"] = to_json(l.determinant());
  doc["signature"] = Json::array({l.signature().positive, l.signature().negative, l.signature().zero});
  doc["even"] = l.even();
  return doc;
}

void print_matrix(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) os << "  " << to_string(m.row_vector(i)) << '\n';
}

IntVector checked_vector(const IntegralLattice& l, const std::string& text) {
  IntVector v = parse_int_vector(text);
  if (v.size() != l.rank())
    throw InputError("vector " + text + " has length " + std::to_string(v.size()) + ", lattice rank is " +
                     std::to_string(l.rank()));
  return v;
}

Json criterion_json(const CriterionResult& r) { return to_json(r); }

void print_criterion(std::ostream& os, const CriterionResult& r) {
  os << to_string(r.status) << " (" << r.method;
  if (r.status == SearchStatus::none_found_within_bound) os << ", bound " << r.bound_used;
  os << ")\n";
  for (const auto& w : r.witness) os << "  witness " << to_string(w) << '\n';
}

}  // namespace

void add_lattice(CLI::App& app, Cli& cli) {
  auto* lat = app.add_subcommand("lattice", "integral lattices: invariants, complements, enumeration, isotropy");
  lat->require_subcommand(1);

  auto src = std::make_shared<LatticeSource>();
  auto* show = lat->add_subcommand("named", "Gram matrix, determinant and signature");
  src->add_to(show);
  show->callback([&cli, src] {
    const IntegralLattice l = src->load();
    cli.emit(lattice_summary(l), [&](std::ostream& os) {
      os << (l.name().empty() ? "lattice" : l.name()) << ", rank " << l.rank() << '\n';
      print_matrix(os, l.gram());
      os << "det " << l.determinant() << ", signature (" << l.signature().positive << ", " << l.signature().negative
         << (l.signature().zero ? ", " + std::to_string(l.signature().zero) : std::string()) << "), "
         << (l.even() ? "even" : "odd") << '\n';
    });
  });

  struct PairArgs {
    LatticeSource src;
    std::string u;
    std::string w;
  };
  auto pa = std::make_shared<PairArgs>();
  auto* pair_cmd = lat->add_subcommand("pair", "(u, w)");
  pa->src.add_to(pair_cmd);
  pair_cmd->add_option("--u", pa->u, "integer vector")->required();
  pair_cmd->add_option("--w", pa->w, "integer vector (default: u)");
  pair_cmd->callback([&cli, pa] {
    const IntegralLattice l = pa->src.load();
    const IntVector u = checked_vector(l, pa->u);
    const IntVector w = pa->w.empty() ? u : checked_vector(l, pa->w);
    const Int p = l.pair(u, w);
    cli.emit(Json{{"u", to_json(u)}, {"w", to_json(w)}, {"pairing", to_json(p)}},
             [&](std::ostream& os) { os << p << '\n'; });
  });

  auto ds = std::make_shared<LatticeSource>();
  auto* disc = lat->add_subcommand("discriminant", "invariant factors of the discriminant group");
  ds->add_to(disc);
  disc->callback([&cli, ds] {
    const IntegralLattice l = ds->load();
    const auto g = discriminant_group(l);
    const Int order = discriminant_order(g);
    cli.emit(Json{{"invariants", to_json(IntVector(g.begin(), g.end()))}, {"order", to_json(order)}},
             [&](std::ostream& os) {
               if (g.empty()) os << "trivial";
               for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " + " : "") << "Z/" << g[i];
               os << "  (order " << order << ")\n";
             });
  });

  struct DivArgs {
    LatticeSource src;
    std::string v;
  };
  auto dv = std::make_shared<DivArgs>();
  auto* div = lat->add_subcommand("divisibility", "positive generator of (v, L)");
  dv->src.add_to(div);
  div->add_option("--vec", dv->v, "integer vector")->required();
  div->callback([&cli, dv] {
    const IntegralLattice l = dv->src.load();
    const IntVector v = checked_vector(l, dv->v);
    const Int d = divisibility(l, v);
    cli.emit(Json{{"v", to_json(v)}, {"divisibility", to_json(d)}}, [&](std::ostream& os) { os << d << '\n'; });
  });

  struct CompArgs {
    LatticeSource src;
    std::vector<std::string> vs;
  };
  auto cp = std::make_shared<CompArgs>();
  auto* comp = lat->add_subcommand("complement", "saturated orthogonal complement of the given vectors");
  cp->src.add_to(comp);
  comp->add_option("--vec", cp->vs, "integer vector, repeatable")->required();
  comp->callback([&cli, cp] {
    const IntegralLattice l = cp->src.load();
    std::vector<IntVector> vs;
    for (const auto& s : cp->vs) vs.push_back(checked_vector(l, s));
    const Complement c = orthogonal_complement(l, vs);
    Json doc = lattice_summary(c.lattice);
    doc["embedding"] = to_json(c.embedding);
    cli.emit(doc, [&](std::ostream& os) {
      os << "rank " << c.lattice.rank() << ", det " << c.lattice.determinant() << "\nbasis:\n";
      print_matrix(os, c.embedding);
      os << "gram:\n";
      print_matrix(os, c.lattice.gram());
    });
  });

  struct EnumArgs {
    LatticeSource src;
    std::string square;
    std::int64_t bound = 10;
  };
  auto ea = std::make_shared<EnumArgs>();
  auto* en = lat->add_subcommand("enumerate", "all v with (v, v) = s");
  ea->src.add_to(en);
  en->add_option("--square", ea->square, "target value s")->required();
  en->add_option("--bound", ea->bound, "coordinate box for indefinite lattices")->capture_default_str();
  en->callback([&cli, ea] {
    const IntegralLattice l = ea->src.load();
    const Enumeration e = enumerate_square(l, parse_int(ea->square), ea->bound);
    cli.emit(to_json(e), [&](std::ostream& os) {
      os << e.vectors.size() << " vectors, "
         << (e.certified ? "complete" : "within coordinate bound " + std::to_string(e.bound_used)) << '\n';
      for (const auto& v : e.vectors) os << "  " << to_string(v) << '\n';
    });
  });

  struct SearchArgs {
    LatticeSource src;
    std::int64_t bound = 10;
  };
  auto ia = std::make_shared<SearchArgs>();
  auto* iso = lat->add_subcommand("isotropic", "a nonzero v with (v, v) = 0");
  ia->src.add_to(iso);
  iso->add_option("--bound", ia->bound, "search bound")->capture_default_str();
  iso->callback([&cli, ia] {
    const CriterionResult r = twisted_k3_criterion(ia->src.load(), ia->bound);
    cli.emit(criterion_json(r), [&](std::ostream& os) { print_criterion(os, r); });
  });

  auto ha = std::make_shared<SearchArgs>();
  auto* hyp = lat->add_subcommand("hyperbolic", "a copy of U");
  ha->src.add_to(hyp);
  hyp->add_option("--bound", ha->bound, "search bound")->capture_default_str();
  hyp->callback([&cli, ha] {
    const CriterionResult r = untwisted_k3_criterion(ha->src.load(), ha->bound);
    cli.emit(criterion_json(r), [&](std::ostream& os) { print_criterion(os, r); });
  });

  struct NegArgs {
    std::int64_t s = 1;
    std::int64_t bound = 100;
  };
  auto na = std::make_shared<NegArgs>();
  auto* neg = lat->add_subcommand("neg-two", "no (-2)-vectors in A1^2 + <-8s>");
  neg->add_option("--s", na->s, "positive integer s")->capture_default_str();
  neg->add_option("--bound", na->bound, "enumeration box")->capture_default_str();
  neg->callback([&cli, na] {
    const NegTwoCertificate c = neg_two_obstruction(na->s, na->bound);
    Json doc = to_json(c.report);
    doc["symbolic"] = c.symbolic;
    doc["enumerated"] = c.enumerated;
    doc["found"] = c.found;
    cli.emit(doc, [&](std::ostream& os) { print_report(os, c.report); });
    cli.fail_unless(c.report.all_passed());
  });
}

void add_k3(CLI::App& app, Cli& cli) {
  auto* k3 = app.add_subcommand("k3", "associated K3 criteria and period divisors");
  k3->require_subcommand(1);

  auto d = std::make_shared<std::int64_t>(10);
  auto* label = k3->add_subcommand("label", "irreducible components of the period divisor D_d");
  label->add_option("--d", *d, "positive integer")->required();
  label->callback([&cli, d] {
    const PeriodDivisorLabel l = d_label(*d);
    cli.emit(to_json(l), [&](std::ostream& os) {
      os << "d = " << l.d << ": " << to_string(l.status);
      for (const auto& c : l.components) os << ' ' << c;
      os << '\n';
    });
  });

  auto sd = std::make_shared<std::int64_t>(10);
  auto* star = k3->add_subcommand("star", "every prime 3 mod 4 divides d to an even power");
  star->add_option("--d", *sd, "positive integer")->required();
  star->callback([&cli, sd] {
    const StarStarPrime s = star_star_prime(*sd);
    cli.emit(to_json(s), [&](std::ostream& os) {
      os << *sd << " =";
      for (const auto& [p, e] : s.factorization) os << ' ' << p << (e > 1 ? "^" + std::to_string(e) : "");
      os << "\n" << (s.holds ? "holds" : "fails") << '\n';
    });
  });

  struct CritArgs {
    LatticeSource src;
    std::string kind = "twisted";
    std::int64_t bound = 200;
  };
  auto ca = std::make_shared<CritArgs>();
  auto* crit = k3->add_subcommand("criterion", "twisted (isotropic class) or untwisted (hyperbolic plane) K3");
  ca->src.add_to(crit);
  crit->add_option("--kind", ca->kind, "twisted or untwisted")
      ->check(CLI::IsMember({"twisted", "untwisted"}))
      ->capture_default_str();
  crit->add_option("--bound", ca->bound, "search bound")->capture_default_str();
  crit->callback([&cli, ca] {
    const IntegralLattice l = ca->src.load();
    const CriterionResult r =
        ca->kind == "twisted" ? twisted_k3_criterion(l, ca->bound) : untwisted_k3_criterion(l, ca->bound);
    cli.emit(criterion_json(r), [&](std::ostream& os) {
      print_criterion(os, r);
      os << "note: " << r.note << '\n';
    });
  });

  struct P0Args {
    std::string file;
    std::int64_t bound = 20;
  };
  auto pa = std::make_shared<P0Args>();
  auto* p0 = k3->add_subcommand("in-p0", "positive 2-plane orthogonal to no (-2)-class");
  p0->add_option("--eta", pa->file, "JSON {\"lattice\": {...}, \"re\": [...], \"im\": [...]}")->required();
  p0->add_option("--bound", pa->bound, "search bound for indefinite complements")->capture_default_str();
  p0->callback([&cli, pa] {
    const P0Result r = in_P0(eta_from_json(parse_json(read_file(pa->file))), pa->bound);
    cli.emit(to_json(r), [&](std::ostream& os) {
      os << to_string(r.status) << (r.in_p ? "" : " (not a positive 2-plane)") << '\n';
      if (r.obstruction) os << "  (-2)-class " << to_string(*r.obstruction) << '\n';
    });
  });

  struct PeriodArgs {
    std::int64_t d = 32;
    std::int64_t bound = 100;
  };
  auto pr = std::make_shared<PeriodArgs>();
  auto* period = k3->add_subcommand("period", "no (-2)-classes in the lattice of D_d when 32 | d");
  period->add_option("--d", pr->d, "positive integer")->capture_default_str();
  period->add_option("--bound", pr->bound, "enumeration box")->capture_default_str();
  period->callback([&cli, pr] {
    const Report r = period_obstruction(pr->d, pr->bound);
    cli.emit(to_json(r), [&](std::ostream& os) { print_report(os, r); });
    cli.fail_unless(r.all_passed());
  });
}

}  // namespace kustab::cli
