#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dflag {

/// Raised when an input file does not conform to its grammar.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, VertexOutOfRange, DuplicateEdge, Loop, BadWeight };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Raised for invalid run configuration (non-prime modulus, missing weights, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a size guard refuses an input.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dflag
