#pragma once

#include <string>
#include <vector>

#include "docgraph/error.hpp"
#include "docgraph/rdf/prefix.hpp"
#include "docgraph/rdf/reference.hpp"
#include "docgraph/rdf/term.hpp"
#include "docgraph/rdfa/xml.hpp"

namespace docgraph::rdfa {

using rdf::resolve_reference;

struct Warning {
  SourcePosition position;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct ExtractionResult {
  std::vector<rdf::Triple> triples;  // document order
  std::vector<Warning> warnings;

  friend bool operator==(const ExtractionResult&, const ExtractionResult&) = default;
};

struct ExtractOptions {
  // Generated blank nodes are labelled `blank_prefix` + counter in the order
  // they are first used. Must start with a letter and be alphanumeric.
  std::string blank_prefix = "b";
};

// Prefixes available before any declaration: rdf, rdfs, xsd.
const rdf::PrefixMap& initial_prefixes();

// Applies the supported RDFa subset to `doc`:
//
//   about, resource   subject / object resources (IRI reference, CURIE,
//                     [safe CURIE] or _:label)
//   href              object resource when @resource is absent
//   typeof            rdf:type triples; types a fresh blank node when the
//                     element names no resource of its own
//   property          literal from @content or the normalized element text,
//                     typed by @datatype; with neither @content nor
//                     @datatype, @resource/@href become an IRI object
//   rel               forward relations, completed by @resource/@href or by
//                     the subjects of descendant elements
//   prefix, xmlns:*   subtree-scoped prefix declarations
//   vocab             default namespace for unprefixed terms in the subtree
//
// Never throws on semantic problems: unknown prefixes, bad references and
// dangling relations become warnings and the affected triple is skipped.
ExtractionResult extract(const XmlElement& doc, const rdf::Iri& base,
                         const ExtractOptions& options = {});

}  // namespace docgraph::rdfa
