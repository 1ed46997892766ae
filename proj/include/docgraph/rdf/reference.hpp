#pragma once

#include <string_view>

#include "docgraph/error.hpp"
#include "docgraph/rdf/term.hpp"

namespace docgraph::rdf {

class MalformedReference : public Error {
 public:
  using Error::Error;
};

// Resolves an IRI reference against an absolute base following the
// RFC 3986 reference-resolution algorithm (including dot-segment removal).
// Throws MalformedReference when `ref` contains whitespace or control
// characters, or when the result is not a valid IRI.
Iri resolve_reference(std::string_view ref, const Iri& base);

}  // namespace docgraph::rdf
