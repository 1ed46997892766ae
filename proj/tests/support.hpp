#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "docgraph/rdf/term.hpp"
#include "docgraph/store/dataset.hpp"

namespace support {

std::filesystem::path fixture_dir();    // fixtures/minisams
std::filesystem::path query_dir();      // queries
std::filesystem::path rdfa_data_dir();  // tests/data/rdfa

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Converts a hand-oracle string (IRI, or '"'-prefixed literal) to a term.
docgraph::rdf::Term hand_term(const std::string& s);

// The ingested fixture (serial execution).
const docgraph::store::Dataset& minisams();

struct RdfaCase {
  std::string name;
  std::string xml;
  std::string expected_nt;
  std::size_t expected_warnings = 0;
};

inline const char* kRdfaBase = "http://example.org/dir/doc";

std::vector<RdfaCase> rdfa_corpus();

// Empty when the extraction matches; otherwise a description of the mismatch.
std::string check_rdfa_case(const RdfaCase& c);

}  // namespace support
