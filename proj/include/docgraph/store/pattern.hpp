#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "docgraph/rdf/term.hpp"

namespace docgraph::store {

// A named query variable. Names match [A-Za-z][A-Za-z0-9_]*.
class Variable {
 public:
  explicit Variable(std::string name);

  static bool is_valid_name(std::string_view name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  std::string name_;
};

using PatternTerm = std::variant<Variable, rdf::Term>;

inline bool is_variable(const PatternTerm& t) { return std::holds_alternative<Variable>(t); }

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// Solution mapping from variable name to term.
using Binding = std::map<std::string, rdf::Term>;

}  // namespace docgraph::store
