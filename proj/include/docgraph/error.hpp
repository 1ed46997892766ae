#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace docgraph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1-based line and column in some text input.
struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
  friend auto operator<=>(const SourcePosition&, const SourcePosition&) = default;
};

inline std::string to_string(const SourcePosition& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

// Raised when a term value violates its syntactic invariants.
class InvalidTerm : public Error {
 public:
  using Error::Error;
};

}  // namespace docgraph
