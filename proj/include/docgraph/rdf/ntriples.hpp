#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "docgraph/error.hpp"
#include "docgraph/rdf/term.hpp"

namespace docgraph::rdf {

// Renders a term in N-Triples syntax: `<iri>`, `_:label`, `"lexical"` for
// xsd:string literals and `"lexical"^^<datatype>` otherwise. Escapes `"`,
// `\`, LF, CR and TAB.
std::string serialize_term(const Term& t);

// `subject predicate object .` without a trailing newline.
std::string serialize_triple(const Triple& t);

class TermSyntaxError : public Error {
 public:
  TermSyntaxError(std::size_t offset, const std::string& message)
      : Error(message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses one N-Triples term starting at `pos`, advancing `pos` past it.
// Throws TermSyntaxError.
Term parse_term_at(std::string_view text, std::size_t& pos);

// Parses a string that must consist of exactly one term.
Term parse_term(std::string_view text);

}  // namespace docgraph::rdf
