#pragma once

#include <string>
#include <vector>

namespace kustab {

/// One named inequality or identity, with the concrete values that decided it.
struct Check {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void add(std::string id, std::string statement, bool passed, std::string detail = {}) {
    checks.push_back({std::move(id), std::move(statement), passed, std::move(detail)});
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c);
    return out;
  }
};

}  // namespace kustab
