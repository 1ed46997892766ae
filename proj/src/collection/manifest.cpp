#include "docgraph/collection/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "docgraph/rdf/reference.hpp"

namespace docgraph::collection {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ManifestError("manifest line " + std::to_string(line) + ": " + message);
}

rdf::Iri to_iri(std::string_view ref, const std::optional<rdf::Iri>& base, std::size_t line) {
  try {
    if (base) return rdf::resolve_reference(ref, *base);
    if (!rdf::Iri::is_valid(ref)) fail(line, "'" + std::string(ref) + "' is not an absolute IRI and no @base is set");
    return rdf::Iri(std::string(ref));
  } catch (const rdf::MalformedReference& e) {
    fail(line, e.what());
  } catch (const InvalidTerm& e) {
    fail(line, e.what());
  }
}

void apply_metadata(ManifestEntry& entry, std::string_view field,
                    const std::optional<rdf::Iri>& base) {
  for (auto item : split(field, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(entry.line, "expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = trim(item.substr(0, eq));
    const std::string value(trim(item.substr(eq + 1)));
    if (key == "title") {
      entry.title = value;
    } else if (key == "creator") {
      entry.creator = value;
    } else if (key == "date") {
      if (!rdf::is_valid_xsd_date(value)) fail(entry.line, "invalid xsd:date '" + value + "'");
      entry.date = rdf::Literal(value, rdf::xsd("date"));
    } else if (key == "responsible") {
      entry.responsible = to_iri(value, base, entry.line);
    } else {
      fail(entry.line, "unknown metadata key '" + std::string(key) + "'");
    }
  }
}

}  // namespace

CollectionManifest parse_manifest(std::string_view text, const std::filesystem::path& directory) {
  CollectionManifest manifest;
  manifest.directory = directory;
  std::set<rdf::Iri> documents;
  const auto lines = split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    if (line.starts_with("@base")) {
      if (manifest.base || !manifest.entries.empty()) fail(line_no, "@base must be the first declaration");
      const std::string_view rest = trim(line.substr(5));
      if (rest.size() < 2 || rest.front() != '<' || rest.back() != '>') fail(line_no, "expected @base <iri>");
      const std::string_view iri = rest.substr(1, rest.size() - 2);
      if (!rdf::Iri::is_valid(iri)) fail(line_no, "invalid base IRI '" + std::string(iri) + "'");
      manifest.base = rdf::Iri(std::string(iri));
      continue;
    }

    const auto fields = split(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) {
      fail(line_no, "expected path<TAB>iri<TAB>format[<TAB>metadata]");
    }
    ManifestEntry entry{std::filesystem::path(std::string(trim(fields[0]))),
                        to_iri(trim(fields[1]), manifest.base, line_no),
                        std::string(trim(fields[2])),
                        {}, {}, {}, {}, line_no};
    if (entry.path.empty()) fail(line_no, "empty path");
    if (entry.format.empty()) fail(line_no, "empty format tag");
    if (fields.size() == 4) apply_metadata(entry, fields[3], manifest.base);
    if (!documents.insert(entry.document).second) {
      fail(line_no, "duplicate document IRI " + entry.document.str());
    }
    const auto file = manifest.file_of(entry);
    if (!std::filesystem::is_regular_file(file)) {
      fail(line_no, "missing file " + file.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CollectionManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot read manifest " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str(), path.parent_path());
}

}  // namespace docgraph::collection
