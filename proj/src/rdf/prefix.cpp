#include "docgraph/rdf/prefix.hpp"

namespace docgraph::rdf {

void PrefixMap::set(std::string prefix, std::string namespace_iri) {
  if (!Iri::is_valid(namespace_iri)) {
    throw InvalidTerm("invalid namespace IRI for prefix '" + prefix + "': " + namespace_iri);
  }
  entries_.insert_or_assign(std::move(prefix), std::move(namespace_iri));
}

bool PrefixMap::contains(std::string_view prefix) const {
  return entries_.find(prefix) != entries_.end();
}

std::optional<std::string> PrefixMap::find(std::string_view prefix) const {
  auto it = entries_.find(prefix);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::string_view, std::string_view>> split_curie(std::string_view curie) {
  const auto colon = curie.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{curie.substr(0, colon), curie.substr(colon + 1)};
}

Iri expand_curie(std::string_view curie, const PrefixMap& prefixes) {
  const auto parts = split_curie(curie);
  if (!parts) throw InvalidTerm("not a CURIE: '" + std::string(curie) + "'");
  const auto ns = prefixes.find(parts->first);
  if (!ns) throw UnknownPrefix(std::string(parts->first));
  return Iri(*ns + std::string(parts->second));
}

}  // namespace docgraph::rdf
