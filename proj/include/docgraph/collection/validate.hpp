#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "docgraph/collection/ingest.hpp"
#include "docgraph/rdf/term.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::collection {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity s);

struct Finding {
  Severity severity;
  rdf::Term document;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;  // sorted by document, then message

  bool has_errors() const;
  std::size_t count(Severity s) const;
};

// Errors: semVM:refines targets that are not a part of any document,
// malformed xsd:date literals. Warnings: documents without vm:responsible,
// omdoc:Symbol objects without sd:definedBy.
//
// A document is any subject of omdoc:hasPart, dc:*, vm:responsible or
// vm:reviewer. Object-level findings are reported against the containing
// documents, or against the object itself when nothing contains it.
ValidationReport validate(const store::Dataset& ds);

// As above, plus one warning per extraction warning of the ingest.
ValidationReport validate(const IngestResult& ingested);

}  // namespace docgraph::collection
