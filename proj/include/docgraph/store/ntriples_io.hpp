#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "docgraph/error.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::store {

class NtParseError : public Error {
 public:
  NtParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// How blank-node labels are treated when loading N-Triples.
enum class BlankNodeScope {
  kPreserve,     // labels kept verbatim (export/import round trips)
  kSourceGraph,  // labels prefixed with `scope_tag` to keep sources apart
};

// Canonical N-Triples for the merged view: one `s p o .` line per triple,
// lines sorted bytewise, LF endings.
std::string export_ntriples(const Dataset& ds);

// Same format restricted to one named graph.
std::string export_graph(const Dataset& ds, const rdf::Iri& graph);

// Parses N-Triples into a fresh dataset whose single named graph is `source`.
// Blank lines and `#` comment lines are skipped. Throws NtParseError.
Dataset import_ntriples(std::string_view text, const rdf::Iri& source);

// Loads into an existing dataset. With kSourceGraph every label L becomes
// `scope_tag + L`; scope_tag must be a valid label prefix (e.g. "g0").
void load_ntriples(Dataset& ds, std::string_view text, const rdf::Iri& source,
                   BlankNodeScope scope = BlankNodeScope::kPreserve,
                   std::string_view scope_tag = {});

}  // namespace docgraph::store
