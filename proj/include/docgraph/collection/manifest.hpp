#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docgraph/error.hpp"
#include "docgraph/rdf/term.hpp"

namespace docgraph::collection {

class ManifestError : public Error {
 public:
  using Error::Error;
};

struct ManifestEntry {
  std::filesystem::path path;  // as written, relative to the manifest directory
  rdf::Iri document;
  std::string format;  // "xml" is extracted; other tags become stubs
  std::optional<std::string> title;
  std::optional<rdf::Literal> date;  // xsd:date
  std::optional<std::string> creator;
  std::optional<rdf::Iri> responsible;
  std::size_t line = 0;
};

struct CollectionManifest {
  std::optional<rdf::Iri> base;
  std::filesystem::path directory;
  std::vector<ManifestEntry> entries;

  std::filesystem::path file_of(const ManifestEntry& e) const { return directory / e.path; }
};

// Line-oriented format:
//
//   @base <iri>
//   path<TAB>document-iri<TAB>format[<TAB>key=value;key=value...]
//
// Blank lines and lines starting with '#' are ignored. Document IRIs are
// resolved against @base. Keys: title, date (xsd:date), creator, responsible
// (IRI). Throws ManifestError on syntax errors, duplicate document IRIs and
// entry files missing under `directory`.
CollectionManifest parse_manifest(std::string_view text, const std::filesystem::path& directory);

// Reads and parses a manifest file; entry paths are relative to its directory.
CollectionManifest load_manifest(const std::filesystem::path& path);

}  // namespace docgraph::collection
