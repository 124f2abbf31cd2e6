#include <exception>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "kustab/error.hpp"

namespace kustab::cli {

Rat parse_rat(const std::string& text) { return Rat::parse(text); }

IntVector parse_int_vector(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw InputError("unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  IntVector out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw InputError("empty vector '" + text + "'");
  return out;
}

void LatticeSource::add_to(CLI::App* app) {
  auto* f = app->add_option("--lattice", file, "lattice JSON file {\"name\", \"gram\"}");
  auto* n = app->add_option("--name", name, "named lattice, e.g. U+A1^2, Ls(3), Mukai24-default");
  f->excludes(n);
}

IntegralLattice LatticeSource::load() const {
  if (!file.empty()) return lattice_from_json(parse_json(read_file(file)));
  if (!name.empty()) return build_named(name);
  throw InputError("give --lattice FILE or --name NAME");
}

void print_report(std::ostream& os, const Report& r) {
  os << r.title << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.id << ": " << c.statement;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  os << (r.all_passed() ? "all checks pass" : "some checks fail") << '\n';
}

}  // namespace kustab::cli

int main(int argc, char** argv) {
  using namespace kustab::cli;
  CLI::App app{"Exact stability, lattice and moduli computations for Clifford modules on quadrics", "ku-stab"};
  app.fallthrough();
  app.require_subcommand(1);
  Cli cli;
  app.add_flag("--json", cli.json, "machine-readable output");
  app.add_option("--format", cli.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  add_tilt(app, cli);
  add_sigma(app, cli);
  add_lattice(app, cli);
  add_k3(app, cli);
  add_moduli(app, cli);
  add_mutate(app, cli);
  add_chern(app, cli);
  add_verify(app, cli);
  add_io(app, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const kustab::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return cli.exit_code;
}
