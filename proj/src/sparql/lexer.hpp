#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "docgraph/sparql/parser.hpp"

namespace docgraph::sparql::detail {

enum class TokenKind {
  kIriRef,     // text = contents between < >
  kPrefixedName,
  kVariable,   // text = name without ? or $
  kString,     // text = unescaped contents
  kInteger,
  kDecimal,
  kKeyword,    // text upper-cased: PREFIX BASE SELECT WHERE UNION FILTER
  kA,          // the `a` shorthand for rdf:type
  kPunct,      // { } ( ) . ; , ^^
  kOperator,   // < > <= >= = !=
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePosition position;
};

std::vector<Token> tokenize(std::string_view text);

}  // namespace docgraph::sparql::detail
