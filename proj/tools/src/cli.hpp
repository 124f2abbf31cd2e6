#pragma once

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kustab/error.hpp"
#include "kustab/io.hpp"

namespace kustab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

/// Output mode and exit status shared by every subcommand.
struct Cli {
  bool json = false;
  std::string format = "text";
  int exit_code = kExitOk;

  bool want_json() const { return json || format == "json"; }

  void emit(const Json& doc, const std::function<void(std::ostream&)>& text) const {
    if (want_json()) std::cout << doc.dump(2) << '\n';
    else text(std::cout);
  }
  void fail_unless(bool ok) {
    if (!ok) exit_code = kExitFailed;
  }
};

Rat parse_rat(const std::string& text);
IntVector parse_int_vector(const std::string& text);

/// --lattice FILE or --name NAME, exactly one.
struct LatticeSource {
  std::string file;
  std::string name;
  void add_to(CLI::App* app);
  IntegralLattice load() const;
};

void print_report(std::ostream& os, const Report& r);

void add_tilt(CLI::App& app, Cli& cli);
void add_sigma(CLI::App& app, Cli& cli);
void add_lattice(CLI::App& app, Cli& cli);
void add_k3(CLI::App& app, Cli& cli);
void add_moduli(CLI::App& app, Cli& cli);
void add_mutate(CLI::App& app, Cli& cli);
void add_chern(CLI::App& app, Cli& cli);
void add_verify(CLI::App& app, Cli& cli);
void add_io(CLI::App& app, Cli& cli);

}  // namespace kustab::cli
