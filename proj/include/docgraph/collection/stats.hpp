#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "docgraph/collection/manifest.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::collection {

struct FormatStats {
  std::string format;
  std::size_t documents = 0;
  std::size_t triples = 0;  // sum of the named-graph sizes of those documents

  friend bool operator==(const FormatStats&, const FormatStats&) = default;
};

// One row per format tag in the manifest, sorted by tag.
std::vector<FormatStats> stats(const store::Dataset& ds, const CollectionManifest& manifest);

}  // namespace docgraph::collection
