#include <iomanip>
#include <memory>

#include "cli.hpp"
#include "kustab/reproduction.hpp"

namespace kustab::cli {

namespace {

void print_moduli(std::ostream& os, const ModuliReport& r) {
  os << "v = " << r.v.str() << "  (v,v) = " << r.square << "  dim " << r.dimension << "  deg " << r.degree
     << "  div " << r.divisibility << "  t = " << r.involution.witness << " mod " << r.involution.modulus << "  "
     << r.label << '\n';
}

void print_context(std::ostream& os, const EulerContext& c) {
  os << "euler:\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << "  " << std::left << std::setw(14) << c.labels[i];
    for (std::size_t j = 0; j < c.size(); ++j) os << ' ' << c.euler(i, j);
    os << '\n';
  }
  os << "classes:\n";
  for (std::size_t i = 0; i < c.classes.rows(); ++i) {
    os << "  " << std::left << std::setw(14) << c.labels[i];
    for (std::size_t j = 0; j < c.classes.cols(); ++j) os << ' ' << c.classes(i, j);
    os << '\n';
  }
}

}  // namespace

void add_moduli(CLI::App& app, Cli& cli) {
  auto* mod = app.add_subcommand("moduli", "hyperkahler moduli invariants of v = a lambda_1 + b lambda_2");
  auto v = std::make_shared<std::string>();
  mod->add_option("--v", *v, "Mukai vector a,b");

  auto max = std::make_shared<int>(20);
  auto* grid = mod->add_subcommand("grid", "invariants for all coprime (a, b) in a box");
  grid->add_option("--max", *max, "0 <= a <= max, |b| <= max")->capture_default_str();
  grid->callback([&cli, max] {
    const auto rows = family_grid(*max);
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    cli.emit(Json{{"max", *max}, {"families", arr}}, [&](std::ostream& os) {
      for (const auto& r : rows) print_moduli(os, r);
    });
  });

  struct H2Args {
    std::string v;
  };
  auto ha = std::make_shared<H2Args>();
  auto* h2 = mod->add_subcommand("h2", "v-perp (or v-perp / Zv) in the default rank 24 Mukai lattice");
  h2->add_option("--v", ha->v, "Mukai vector a,b")->required();
  h2->callback([&cli, ha] {
    const MukaiVector mv = parse_mukai_vector(ha->v);
    const MukaiEmbedding& m = mukai24_default();
    const H2Structure h = h2_structure(m.ambient, m.vector(mv.a, mv.b));
    Json doc = to_json(h);
    doc["convention"] = m.convention;
    cli.emit(doc, [&](std::ostream& os) {
      os << (h.quotient ? "v-perp / Zv" : "v-perp") << ", rank " << h.lattice.rank() << ", det "
         << h.lattice.determinant() << ", discriminant";
      if (h.discriminant.empty()) os << " trivial";
      for (const auto& g : h.discriminant) os << " Z/" << g;
      os << '\n' << m.convention << '\n';
    });
  });

  mod->callback([&cli, mod, v] {
    if (!mod->get_subcommands().empty()) return;
    if (v->empty()) throw InputError("moduli needs --v a,b or a subcommand (grid, h2)");
    const ModuliReport r = family_invariants(parse_mukai_vector(*v));
    cli.emit(to_json(r), [&](std::ostream& os) {
      print_moduli(os, r);
      const std::int64_t hb = r.polarization.b;
      os << "polarization h = " << r.polarization.a << " lambda_1 " << (hb < 0 ? "- " : "+ ") << (hb < 0 ? -hb : hb)
         << " lambda_2\n";
      os << "discriminants: prim " << r.prim_discriminant_order << ", Zh " << r.h_discriminant_order << ", v-perp "
         << r.h2_discriminant_order << ", index " << r.index << '\n';
      for (const auto& c : r.candidates) os << "candidate: " << c << '\n';
      os << r.convention << '\n';
    });
  });
}

void add_mutate(CLI::App& app, Cli& cli) {
  struct Args {
    std::string context;
    std::string builtin;
    std::string script;
  };
  auto a = std::make_shared<Args>();
  auto* mut = app.add_subcommand("mutate", "left and right mutations of an exceptional collection");
  auto* c = mut->add_option("--context", a->context, "JSON {\"basis\": [...], \"euler\": [[...]]}");
  auto* b = mut->add_option("--builtin", a->builtin, "sigma or q3");
  c->excludes(b);
  mut->add_option("--script", a->script, "steps such as \"L0,R2[1]\"");
  mut->callback([&cli, a] {
    EulerContext ctx;
    if (!a->context.empty()) ctx = context_from_json(parse_json(read_file(a->context)));
    else if (!a->builtin.empty()) ctx = builtin_context(a->builtin);
    else throw InputError("give --context FILE or --builtin NAME");
    const auto steps = parse_script(a->script);
    const EulerContext out = steps.empty() ? ctx : mutate_collection(ctx, steps);
    Json doc = to_json(out);
    Json trace = Json::array();
    for (const auto& s : steps) trace.push_back(to_string(s));
    doc["script"] = trace;
    doc["determinant"] = to_json(determinant(out.euler));
    doc["exceptional"] = out.numerically_exceptional();
    doc["semiorthogonal"] = out.semiorthogonal();
    cli.emit(doc, [&](std::ostream& os) {
      print_context(os, out);
      os << "det " << determinant(out.euler) << ", exceptional " << (out.numerically_exceptional() ? "yes" : "no")
         << ", semiorthogonal " << (out.semiorthogonal() ? "yes" : "no") << '\n';
    });
  });
}

void add_chern(CLI::App& app, Cli& cli) {
  auto* ch = app.add_subcommand("chern", "Chern characters on the quadric threefold");
  ch->require_subcommand(1);
  struct Args {
    std::string file;
    std::string ch0;
    std::string ch1 = "0";
    std::string ch2 = "0";
    std::string ch3;
    bool twisted = false;
    std::string beta;
  };
  auto a = std::make_shared<Args>();
  auto* an = ch->add_subcommand("analyze", "twist, discriminant, slope and restriction to the surface");
  auto* f = an->add_option("--file", a->file, "Chern JSON with basis \"Y\"");
  auto* c0 = an->add_option("--ch0", a->ch0, "rank as p/q");
  f->excludes(c0);
  an->add_option("--ch1", a->ch1, "degree one coefficient of h")->capture_default_str();
  an->add_option("--ch2", a->ch2, "degree two coefficient of h^2")->capture_default_str();
  an->add_option("--ch3", a->ch3, "degree three coefficient of h^3 (unknown when omitted)");
  an->add_flag("--twisted", a->twisted, "input is already the Clifford-twisted character");
  an->add_option("--beta", a->beta, "also report the beta-twisted class");
  an->callback([&cli, a] {
    ChernY e;
    if (!a->file.empty()) {
      e = chern_y_from_json(parse_json(read_file(a->file)));
    } else {
      if (a->ch0.empty()) throw InputError("give --file FILE or --ch0 (with --ch1, --ch2, --ch3)");
      e = {parse_rat(a->ch0), parse_rat(a->ch1), parse_rat(a->ch2), std::nullopt};
      if (!a->ch3.empty()) e.ch3 = parse_rat(a->ch3);
    }
    const ChernY raw = a->twisted ? untwist_cl0(e) : e;
    const ChernY tw = a->twisted ? e : twist_cl0(e);
    const TwistedClass v = to_twisted_class(tw);
    const Rat delta = discriminant(v);
    const ExtRat mu = slope_h(v);
    const ChernSigma sig = restrict_to_sigma(raw);
    Json doc{{"raw", to_json(raw)},     {"twisted", to_json(tw)}, {"v", to_json(v)},
             {"delta", to_json(delta)}, {"mu_h", to_json(mu)},    {"sigma", to_json(sig)},
             {"integral", looks_integral(raw)}};
    std::optional<TwistedClass> vb;
    if (!a->beta.empty()) {
      vb = beta_twist(v, parse_rat(a->beta));
      doc["v_beta"] = to_json(*vb);
    }
    cli.emit(doc, [&](std::ostream& os) {
      os << "ch          " << to_string(raw) << '\n'
         << "ch_Cl0      " << to_string(tw) << '\n'
         << "v           " << to_string(v) << '\n'
         << "Delta       " << delta << '\n'
         << "mu_h        " << mu << '\n'
         << "on Sigma    " << to_string(sig) << '\n';
      if (vb) os << "v^beta      " << to_string(*vb) << '\n';
      if (!looks_integral(raw)) os << "note: ch0 or ch1 is not integral\n";
    });
  });
}

void add_verify(CLI::App& app, Cli& cli) {
  auto filter = std::make_shared<std::string>();
  auto* ver = app.add_subcommand("verify", "run the reproduction suite");
  ver->add_option("--filter", *filter, "only items carrying this tag");
  ver->callback([&cli, filter] {
    const auto items = verify_paper(filter->empty() ? std::nullopt : std::optional<std::string>(*filter));
    if (items.empty()) std::cerr << "warning: no verification item carries tag '" << *filter << "'\n";
    bool ok = true;
    Json arr = Json::array();
    for (const auto& it : items) {
      ok = ok && it.status == ItemStatus::pass;
      arr.push_back(Json{{"id", it.id},
                         {"location", it.location},
                         {"tags", it.tags},
                         {"status", to_string(it.status)},
                         {"details", it.details}});
    }
    cli.emit(Json{{"items", arr}, {"passed", ok}, {"count", items.size()}}, [&](std::ostream& os) {
      for (const auto& it : items)
        os << std::left << std::setw(13) << ("[" + to_string(it.status) + "]") << std::setw(36) << it.id << it.details
           << '\n';
      os << items.size() << " items, " << (ok ? "all pass" : "failures present") << '\n';
    });
    cli.fail_unless(ok);
  });
}

void add_io(CLI::App& app, Cli& /*cli*/) {
  auto* io = app.add_subcommand("io", "structured input and output");
  io->require_subcommand(1);
  auto file = std::make_shared<std::string>();
  auto* rt = io->add_subcommand("roundtrip", "parse a document and print it back in canonical form");
  rt->add_option("file", *file, "JSON document (lattice, Euler context or Chern character)")->required();
  rt->callback([file] { std::cout << io_roundtrip(read_file(*file)) << '\n'; });
}

}  // namespace kustab::cli
