#pragma once

#include <stdexcept>
#include <string>

namespace kustab {

/// Raised for malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kustab
