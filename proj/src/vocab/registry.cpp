#include "docgraph/vocab/registry.hpp"

#include <algorithm>
#include <cctype>

namespace docgraph::vocab {

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::kObject: return "Object";
    case Dimension::kCollection: return "Collection";
    case Dimension::kDocument: return "Document";
    case Dimension::kOrganization: return "Organization";
    case Dimension::kProject: return "Project";
    case Dimension::kExternal: return "External";
    case Dimension::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<Dimension> parse_dimension(std::string_view name) {
  for (const Dimension d : kAllDimensions) {
    const std::string_view candidate = to_string(d);
    if (candidate.size() == name.size() &&
        std::equal(candidate.begin(), candidate.end(), name.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return d;
    }
  }
  return std::nullopt;
}

rdf::Iri vm(std::string_view local) { return rdf::Iri(std::string(iri::kVm) + std::string(local)); }
rdf::Iri sem_vm(std::string_view local) {
  return rdf::Iri(std::string(iri::kSemVm) + std::string(local));
}
rdf::Iri omdoc(std::string_view local) {
  return rdf::Iri(std::string(iri::kOmdoc) + std::string(local));
}
rdf::Iri dc(std::string_view local) { return rdf::Iri(std::string(iri::kDc) + std::string(local)); }
rdf::Iri foaf(std::string_view local) {
  return rdf::Iri(std::string(iri::kFoaf) + std::string(local));
}
rdf::Iri sd(std::string_view local) { return rdf::Iri(std::string(iri::kSd) + std::string(local)); }

void VocabularyRegistry::add_namespace(std::string prefix, std::string iri, Dimension dimension) {
  for (const auto& ns : namespaces_) {
    if (ns.prefix == prefix) throw Error("prefix '" + prefix + "' already registered");
    if (ns.iri.starts_with(iri) || iri.starts_with(ns.iri)) {
      throw Error("namespace " + iri + " overlaps " + ns.iri);
    }
  }
  if (!rdf::Iri::is_valid(iri)) throw InvalidTerm("invalid namespace IRI " + iri);
  namespaces_.push_back({std::move(prefix), std::move(iri), dimension});
}

void VocabularyRegistry::add_term(std::string_view prefix, std::string_view local,
                                  std::optional<Dimension> dimension) {
  const auto ns = std::find_if(namespaces_.begin(), namespaces_.end(),
                               [&](const Namespace& n) { return n.prefix == prefix; });
  if (ns == namespaces_.end()) throw rdf::UnknownPrefix(std::string(prefix));
  terms_.push_back({rdf::Iri(ns->iri + std::string(local)),
                    std::string(prefix) + ":" + std::string(local),
                    dimension.value_or(ns->dimension)});
}

std::optional<TermEntry> VocabularyRegistry::lookup(std::string_view curie) const {
  for (const auto& t : terms_) {
    if (t.curie == curie) return t;
  }
  return std::nullopt;
}

Dimension VocabularyRegistry::dimension_of(const rdf::Iri& p) const {
  for (const auto& t : terms_) {
    if (t.iri == p) return t.dimension;
  }
  const Namespace* best = nullptr;
  for (const auto& ns : namespaces_) {
    if (p.str().starts_with(ns.iri) && (best == nullptr || ns.iri.size() > best->iri.size())) {
      best = &ns;
    }
  }
  return best ? best->dimension : Dimension::kUnknown;
}

rdf::PrefixMap VocabularyRegistry::prefixes() const {
  rdf::PrefixMap map;
  for (const auto& ns : namespaces_) map.set(ns.prefix, ns.iri);
  return map;
}

const VocabularyRegistry& builtin_registry() {
  static const VocabularyRegistry registry = [] {
    VocabularyRegistry r;
    r.add_namespace("vm", std::string(iri::kVm), Dimension::kOrganization);
    for (auto t : {"responsible", "reviewer", "state"}) r.add_term("vm", t);

    r.add_namespace("semVM", std::string(iri::kSemVm), Dimension::kCollection);
    r.add_term("semVM", "refines");

    r.add_namespace("omdoc", std::string(iri::kOmdoc), Dimension::kObject);
    for (auto t : {"Theory", "Symbol", "Definition", "Assertion", "Proof", "occursInDefinitionOf",
                   "proves"}) {
      r.add_term("omdoc", t);
    }
    // Layout containment belongs to the document dimension.
    r.add_term("omdoc", "hasPart", Dimension::kDocument);

    r.add_namespace("dc", std::string(iri::kDc), Dimension::kDocument);
    for (auto t : {"title", "date", "creator", "format"}) r.add_term("dc", t);

    r.add_namespace("foaf", std::string(iri::kFoaf), Dimension::kExternal);
    for (auto t : {"name", "Person"}) r.add_term("foaf", t);

    r.add_namespace("sd", std::string(iri::kSd), Dimension::kProject);
    for (auto t : {"DefinitionTable", "proofState", "certificationState", "docState", "definedBy",
                   "notation"}) {
      r.add_term("sd", t);
    }

    r.add_namespace("rdf", std::string(rdf::ns::kRdf), Dimension::kExternal);
    r.add_term("rdf", "type");
    r.add_namespace("rdfs", std::string(rdf::ns::kRdfs), Dimension::kExternal);
    r.add_namespace("xsd", std::string(rdf::ns::kXsd), Dimension::kExternal);
    for (auto t : {"string", "date", "integer", "decimal"}) r.add_term("xsd", t);
    return r;
  }();
  return registry;
}

store::Dataset filter_by_dimensions(const store::Dataset& ds, const std::set<Dimension>& keep,
                                    const VocabularyRegistry& registry) {
  store::Dataset out;
  for (const auto& graph : ds.graph_names()) {
    for (const auto& t : ds.graph_triples(graph)) {
      if (keep.contains(registry.dimension_of(t.predicate))) out.insert(graph, t);
    }
  }
  return out;
}

}  // namespace docgraph::vocab
