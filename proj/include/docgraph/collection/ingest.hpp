#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "docgraph/collection/manifest.hpp"
#include "docgraph/error.hpp"
#include "docgraph/execution.hpp"
#include "docgraph/rdfa/extract.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::collection {

// An entry file that is not well-formed XML.
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct DocumentWarning {
  rdf::Iri document;
  std::filesystem::path path;
  rdfa::Warning warning;
};

struct IngestResult {
  store::Dataset dataset;
  std::vector<DocumentWarning> warnings;  // manifest order, then document order
};

// Builds one named graph per manifest entry. XML entries are extracted with
// their document IRI as base and blank nodes labelled `d<entry>b<n>`; other
// formats contribute a dc:format stub. Manifest metadata is added to the
// entry's graph. kParallel extracts entries concurrently; the merge is
// serial and in manifest order, so both modes give identical datasets.
IngestResult ingest(const CollectionManifest& manifest, Execution execution = Execution::kSerial);

IngestResult ingest(const std::filesystem::path& manifest_path,
                    Execution execution = Execution::kSerial);

}  // namespace docgraph::collection
