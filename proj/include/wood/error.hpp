#pragma once

#include <stdexcept>
#include <string>

namespace wood {

// Raised when an operation's preconditions are violated by its arguments.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a builder refuses an input that fails its certification
// precondition (e.g. a non-crooked function table).
class ConstructionRefused : public std::runtime_error {
 public:
  explicit ConstructionRefused(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wood
