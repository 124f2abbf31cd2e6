#include <sstream>

#include "cli.hpp"
#include "kustab/euler_sigma.hpp"

namespace kustab::cli {

namespace {

ChernSigma parse_sigma_class(const std::string& text) {
  std::vector<Rat> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rat(item));
  if (parts.size() != 4) throw InputError("expected rk,b1,b2,c, got '" + text + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

Json euler_matrix_json(const EulerMatrix& m) { return Json{{"basis", m.basis_labels}, {"euler", to_json(m.entries)}}; }

}  // namespace

void add_tilt(CLI::App& app, Cli& cli) {
  auto* tilt = app.add_subcommand("tilt", "tilt stability: charges, slopes, heart window, walls");
  tilt->require_subcommand(1);

  struct VerifyArgs {
    std::string alpha_sq = "1/32";
    std::string beta = "-5/4";
  };
  auto va = std::make_shared<VerifyArgs>();
  auto* verify = tilt->add_subcommand("verify", "certify the slope chain and double-tilt orderings");
  verify->add_option("--alpha-sq", va->alpha_sq, "alpha^2 as p/q")->capture_default_str();
  verify->add_option("--beta", va->beta, "beta as p/q")->capture_default_str();
  verify->callback([&cli, va] {
    const Report r = verify_heart_window(TiltParams(parse_rat(va->alpha_sq), parse_rat(va->beta)));
    cli.emit(to_json(r), [&](std::ostream& os) { print_report(os, r); });
    cli.fail_unless(r.all_passed());
  });

  struct WallArgs {
    std::string v;
    int bound = 5;
  };
  auto wa = std::make_shared<WallArgs>();
  auto* walls = tilt->add_subcommand("wall-scan", "alpha^2 at which Z(w) and Z(v) become parallel");
  walls->add_option("--v", wa->v, "Mukai vector a,b")->required();
  walls->add_option("--bound", wa->bound, "box |a'|,|b'| <= bound")->capture_default_str();
  walls->callback([&cli, wa] {
    const MukaiVector v = parse_mukai_vector(wa->v);
    const auto sols = wall_scan(v, wa->bound);
    Json arr = Json::array();
    for (const auto& s : sols) arr.push_back(to_json(s));
    cli.emit(Json{{"v", to_json(v)}, {"bound", wa->bound}, {"walls", arr}}, [&](std::ostream& os) {
      os << "walls for v = " << v.str() << ", |w| <= " << wa->bound << '\n';
      for (const auto& s : sols)
        os << "  w = " << s.destabilizer.str() << "  alpha^2 = " << (s.alpha_sq_root ? s.alpha_sq_root->str() : "none")
           << (s.in_window ? "  (in window)" : "") << '\n';
    });
  });

  struct TableArgs {
    std::string alpha_sq;
    std::string beta;
  };
  auto ta = std::make_shared<TableArgs>();
  auto* table = tilt->add_subcommand("table", "twisted characters, discriminants and slopes of the exceptional sheaves");
  table->add_option("--alpha-sq", ta->alpha_sq, "add tilt slopes at this alpha^2");
  table->add_option("--beta", ta->beta, "beta for the tilt slopes (default -5/4)");
  table->callback([&cli, ta] {
    std::optional<TiltParams> p;
    if (!ta->alpha_sq.empty())
      p.emplace(parse_rat(ta->alpha_sq), ta->beta.empty() ? kDoubleTiltBeta : parse_rat(ta->beta));
    else if (!ta->beta.empty())
      throw InputError("--beta needs --alpha-sq");
    Json rows = Json::array();
    for (const auto& e : exceptional_table()) {
      Json row{{"name", e.name},
               {"ch", to_json(e.twisted_ch)},
               {"v", to_json(e.twisted)},
               {"delta", to_json(discriminant(e.twisted))},
               {"mu_h", to_json(slope_h(e.twisted))}};
      if (p) {
        row["Z"] = to_json(z_first(*p, e.twisted));
        row["mu"] = to_json(tilt_slope(*p, e.twisted, Tilt::first));
        row["Z0"] = to_json(z_second(*p, e.twisted));
        row["mu0"] = to_json(tilt_slope(*p, e.twisted, Tilt::second));
      }
      rows.push_back(row);
    }
    cli.emit(Json{{"classes", rows}}, [&](std::ostream& os) {
      for (const auto& e : exceptional_table()) {
        os << e.name << ": " << to_string(e.twisted_ch) << "  Delta = " << discriminant(e.twisted)
           << "  mu_h = " << slope_h(e.twisted);
        if (p)
          os << "  Z = " << z_first(*p, e.twisted) << "  mu = " << tilt_slope(*p, e.twisted, Tilt::first)
             << "  mu0 = " << tilt_slope(*p, e.twisted, Tilt::second);
        os << '\n';
      }
    });
  });

  struct ChargeArgs {
    std::string alpha_sq;
    std::string v = "1,0";
  };
  auto ca = std::make_shared<ChargeArgs>();
  auto* charge = tilt->add_subcommand("charge", "Z_alpha(a lambda_1 + b lambda_2)");
  charge->add_option("--alpha-sq", ca->alpha_sq, "alpha^2 >= 0 as p/q")->required();
  charge->add_option("--v", ca->v, "Mukai vector a,b")->capture_default_str();
  charge->callback([&cli, ca] {
    const Rat a = parse_rat(ca->alpha_sq);
    const MukaiVector v = parse_mukai_vector(ca->v);
    const GaussRat z = ku_charge(a, v);
    const Rat det = charge_independence_determinant(a);
    cli.emit(Json{{"alpha_sq", to_json(a)}, {"v", to_json(v)}, {"Z", to_json(z)}, {"independence_det", to_json(det)}},
             [&](std::ostream& os) {
               os << "Z(" << v.str() << ") = " << z << '\n' << "independence determinant = " << det << '\n';
             });
  });
}

void add_sigma(CLI::App& app, Cli& cli) {
  auto* sigma = app.add_subcommand("sigma", "Euler form of Clifford modules on the quadric surface");
  sigma->require_subcommand(1);

  sigma->add_subcommand("gram", "Euler matrix of Cl0, Cl0(-h1), Cl0(-h2), Cl0(-h)")->callback([&cli] {
    const EulerMatrix g = basis_gram();
    const Int det = determinant(g.entries);
    const bool agrees = g.entries == basis_gram_table().entries;
    Json doc = euler_matrix_json(g);
    doc["determinant"] = to_json(det);
    doc["matches_table"] = agrees;
    cli.emit(doc, [&](std::ostream& os) {
      for (std::size_t i = 0; i < g.entries.rows(); ++i) {
        os << g.basis_labels[i] << ":";
        for (std::size_t j = 0; j < g.entries.cols(); ++j) os << ' ' << g.entries(i, j);
        os << '\n';
      }
      os << "determinant " << det << '\n';
    });
    cli.fail_unless(agrees);
  });

  auto bound = std::make_shared<int>(50);
  auto* obs = sigma->add_subcommand("obstruction", "no rank 4 class with chi(E,E) = 2 survives the parity tests");
  obs->add_option("--bound", *bound, "box |b1|,|b2|,|c| <= bound")->capture_default_str();
  obs->callback([&cli, bound] {
    const Rank4Scan s = rank4_chi2_obstruction(*bound);
    Json doc = to_json(s.report);
    doc["classes"] = s.classes;
    doc["chi_two"] = s.chi_two;
    doc["counterexamples"] = s.counterexamples;
    cli.emit(doc, [&](std::ostream& os) { print_report(os, s.report); });
    cli.fail_unless(s.report.all_passed());
  });

  struct BogArgs {
    int rank = 4;
    int bound = 30;
  };
  auto ba = std::make_shared<BogArgs>();
  auto* bog = sigma->add_subcommand("bogomolov", "Delta >= 0 on admissible classes, and Delta/4 = rk^2/16 - chi");
  bog->add_option("--rank", ba->rank, "positive multiple of 4")->capture_default_str();
  bog->add_option("--bound", ba->bound, "box |b1|,|b2|,|c| <= bound")->capture_default_str();
  bog->callback([&cli, ba] {
    const BogomolovScan s = bogomolov_surface_scan(ba->rank, ba->bound);
    Json doc = to_json(s.report);
    doc["classes"] = s.classes;
    doc["admissible"] = s.admissible;
    doc["violations"] = s.violations;
    doc["identity_failures"] = s.identity_failures;
    cli.emit(doc, [&](std::ostream& os) { print_report(os, s.report); });
    cli.fail_unless(s.report.all_passed());
  });

  struct ChiArgs {
    std::string e;
    std::string f;
  };
  auto xa = std::make_shared<ChiArgs>();
  auto* chi = sigma->add_subcommand("chi", "chi(E, F) of characters rk,b1,b2,c");
  chi->add_option("--e", xa->e, "rk,b1,b2,c")->required();
  chi->add_option("--f", xa->f, "rk,b1,b2,c (default: E)");
  chi->callback([&cli, xa] {
    const ChernSigma e = parse_sigma_class(xa->e);
    const ChernSigma f = xa->f.empty() ? e : parse_sigma_class(xa->f);
    const Rat v = euler_pairing_sigma(e, f);
    const Rat d = discriminant_sigma(e);
    cli.emit(Json{{"e", to_json(e)}, {"f", to_json(f)}, {"chi", to_json(v)}, {"delta_e", to_json(d)}},
             [&](std::ostream& os) { os << "chi(E, F) = " << v << "\nDelta(E) = " << d << '\n'; });
  });
}

}  // namespace kustab::cli
