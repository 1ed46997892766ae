#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "docgraph/error.hpp"
#include "docgraph/rdf/prefix.hpp"
#include "docgraph/sparql/query.hpp"

namespace docgraph::sparql {

class QuerySyntaxError : public Error {
 public:
  QuerySyntaxError(SourcePosition pos, const std::string& message)
      : Error(to_string(pos) + ": " + message), position_(pos), message_(message) {}

  SourcePosition position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  SourcePosition position_;
  std::string message_;
};

struct ParseOptions {
  // Relative `<...>` references resolve against BASE if declared, else this.
  std::string base = "http://localhost/";
  // Prefixes used but not declared are taken from here (and recorded in the
  // query's prefix map). Defaults to the builtin vocabulary namespaces.
  const rdf::PrefixMap* fallback_prefixes = nullptr;
  bool use_fallback_prefixes = true;
};

// Accepts `#` comments, PREFIX/BASE, SELECT with an explicit variable list,
// an optional WHERE, triple patterns with `;` and `,` continuations, `a`,
// UNION between groups, and FILTER with a single comparison.
// Throws QuerySyntaxError, or rdf::UnknownPrefix for an unresolvable CURIE.
SelectQuery parse_query(std::string_view text, const ParseOptions& options = {});

}  // namespace docgraph::sparql
