#include "docgraph/collection/ingest.hpp"

#include <exception>
#include <fstream>
#include <sstream>

#include "docgraph/rdfa/xml.hpp"
#include "docgraph/vocab/registry.hpp"

namespace docgraph::collection {

namespace {

struct Extracted {
  std::vector<rdf::Triple> triples;
  std::vector<rdfa::Warning> warnings;
  std::exception_ptr error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Extracted extract_entry(const CollectionManifest& manifest, std::size_t index) {
  const ManifestEntry& entry = manifest.entries[index];
  const rdf::Term doc(entry.document);
  Extracted out;
  try {
    const auto file = manifest.file_of(entry);
    if (entry.format == "xml") {
      rdfa::XmlElement root;
      try {
        root = rdfa::parse_xml(read_file(file));
      } catch (const rdfa::XmlSyntaxError& e) {
        throw DocumentError(file.string() + ":" + e.what());
      }
      auto result = rdfa::extract(root, entry.document, {"d" + std::to_string(index) + "b"});
      out.triples = std::move(result.triples);
      out.warnings = std::move(result.warnings);
    } else {
      out.triples.emplace_back(doc, vocab::dc("format"), rdf::Literal(entry.format));
    }
    if (entry.title) out.triples.emplace_back(doc, vocab::dc("title"), rdf::Literal(*entry.title));
    if (entry.date) out.triples.emplace_back(doc, vocab::dc("date"), *entry.date);
    if (entry.creator) out.triples.emplace_back(doc, vocab::dc("creator"), rdf::Literal(*entry.creator));
    if (entry.responsible) out.triples.emplace_back(doc, vocab::vm("responsible"), *entry.responsible);
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

}  // namespace

IngestResult ingest(const CollectionManifest& manifest, Execution execution) {
  const std::size_t n = manifest.entries.size();
  std::vector<Extracted> extracted(n);
  if (execution == Execution::kParallel) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      extracted[static_cast<std::size_t>(i)] = extract_entry(manifest, static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) extracted[i] = extract_entry(manifest, i);
  }

  IngestResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (extracted[i].error) std::rethrow_exception(extracted[i].error);
    const ManifestEntry& entry = manifest.entries[i];
    for (const auto& t : extracted[i].triples) result.dataset.insert(entry.document, t);
    for (auto& w : extracted[i].warnings) {
      result.warnings.push_back({entry.document, entry.path, std::move(w)});
    }
  }
  return result;
}

IngestResult ingest(const std::filesystem::path& manifest_path, Execution execution) {
  return ingest(load_manifest(manifest_path), execution);
}

}  // namespace docgraph::collection
