#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "docgraph/collection/ingest.hpp"
#include "docgraph/rdf/ntriples.hpp"
#include "docgraph/rdfa/extract.hpp"
#include "docgraph/rdfa/xml.hpp"
#include "docgraph/store/ntriples_io.hpp"

namespace support {

using namespace docgraph;

std::filesystem::path fixture_dir() { return DOCGRAPH_FIXTURE_DIR; }
std::filesystem::path query_dir() { return DOCGRAPH_QUERY_DIR; }
std::filesystem::path rdfa_data_dir() { return DOCGRAPH_RDFA_DATA_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

TempDir::TempDir() {
  std::random_device rd;
  for (;;) {
    path_ = std::filesystem::temp_directory_path() / ("docgraph-test-" + std::to_string(rd()));
    if (std::filesystem::create_directory(path_)) return;
  }
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

rdf::Term hand_term(const std::string& s) {
  if (s.empty() || s.front() != '"') return rdf::Iri(s);
  const auto caret = s.find("^^");
  if (caret == std::string::npos) return rdf::Literal(s.substr(1));
  return rdf::Literal(s.substr(1, caret - 1), rdf::Iri(s.substr(caret + 2)));
}

const store::Dataset& minisams() {
  static const store::Dataset ds =
      collection::ingest(fixture_dir() / "manifest.tsv", Execution::kSerial).dataset;
  return ds;
}

std::vector<RdfaCase> rdfa_corpus() {
  std::vector<RdfaCase> out;
  for (const auto& entry : std::filesystem::directory_iterator(rdfa_data_dir())) {
    if (entry.path().extension() != ".xml") continue;
    RdfaCase c;
    c.name = entry.path().stem().string();
    c.xml = read_file(entry.path());
    auto nt = entry.path();
    c.expected_nt = read_file(nt.replace_extension(".nt"));
    const std::string marker = "# warnings: ";
    if (c.expected_nt.starts_with(marker)) c.expected_warnings = std::stoul(c.expected_nt.substr(marker.size()));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const RdfaCase& a, const RdfaCase& b) { return a.name < b.name; });
  return out;
}

std::string check_rdfa_case(const RdfaCase& c) {
  const rdf::Iri base(kRdfaBase);
  const auto result = rdfa::extract(rdfa::parse_xml(c.xml), base);
  const std::set<rdf::Triple> actual(result.triples.begin(), result.triples.end());
  const auto expected_triples = store::import_ntriples(c.expected_nt, base).triples();
  const std::set<rdf::Triple> expected(expected_triples.begin(), expected_triples.end());
  std::string problems;
  for (const auto& t : expected) {
    if (!actual.contains(t)) problems += "  missing " + rdf::serialize_triple(t) + "\n";
  }
  for (const auto& t : actual) {
    if (!expected.contains(t)) problems += "  unexpected " + rdf::serialize_triple(t) + "\n";
  }
  if (actual.size() != result.triples.size()) problems += "  duplicate triples emitted\n";
  if (result.warnings.size() != c.expected_warnings) {
    problems += "  expected " + std::to_string(c.expected_warnings) + " warnings, got " +
                std::to_string(result.warnings.size()) + "\n";
    for (const auto& w : result.warnings) problems += "    " + to_string(w.position) + " " + w.message + "\n";
  }
  return problems;
}

}  // namespace support
