#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "docgraph/error.hpp"
#include "docgraph/rdf/prefix.hpp"
#include "docgraph/store/pattern.hpp"

namespace docgraph::sparql {

using store::Binding;
using store::PatternTerm;
using store::TriplePattern;
using store::Variable;

enum class CompareOp { kLess, kGreater, kLessEqual, kGreaterEqual, kEqual, kNotEqual };

std::string_view to_string(CompareOp op);

struct FilterExpr {
  CompareOp op;
  PatternTerm lhs;
  PatternTerm rhs;

  friend bool operator==(const FilterExpr&, const FilterExpr&) = default;
};

struct GroupPattern;

struct Union {
  std::shared_ptr<const GroupPattern> left;
  std::shared_ptr<const GroupPattern> right;
};

struct Filter {
  FilterExpr expr;
};

using Element = std::variant<TriplePattern, Union, Filter>;

struct GroupPattern {
  std::vector<Element> elements;
};

struct SelectQuery {
  rdf::PrefixMap prefixes;
  std::vector<std::string> projection;  // names without '?'
  GroupPattern pattern;
};

// Variables mentioned anywhere in the group, in first-occurrence order.
std::vector<std::string> variables_of(const GroupPattern& group);

}  // namespace docgraph::sparql
