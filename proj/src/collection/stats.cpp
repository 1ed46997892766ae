#include "docgraph/collection/stats.hpp"

#include <map>

namespace docgraph::collection {

std::vector<FormatStats> stats(const store::Dataset& ds, const CollectionManifest& manifest) {
  std::map<std::string, FormatStats> groups;
  for (const auto& entry : manifest.entries) {
    auto& row = groups[entry.format];
    row.format = entry.format;
    ++row.documents;
    row.triples += ds.graph_size(entry.document);
  }
  std::vector<FormatStats> out;
  for (auto& [tag, row] : groups) out.push_back(std::move(row));
  return out;
}

}  // namespace docgraph::collection
