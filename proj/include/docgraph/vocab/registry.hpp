#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "docgraph/rdf/prefix.hpp"
#include "docgraph/rdf/term.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::vocab {

// Formality dimensions along which document markup is classified.
enum class Dimension { kObject, kCollection, kDocument, kOrganization, kProject, kExternal, kUnknown };

inline constexpr std::array<Dimension, 7> kAllDimensions{
    Dimension::kObject,  Dimension::kCollection, Dimension::kDocument, Dimension::kOrganization,
    Dimension::kProject, Dimension::kExternal,   Dimension::kUnknown};

std::string_view to_string(Dimension d);
// Case-insensitive; accepts the names printed by to_string.
std::optional<Dimension> parse_dimension(std::string_view name);

namespace iri {
inline constexpr std::string_view kVm = "http://www.sams-projekt.de/ontologies/VersionManagement#";
inline constexpr std::string_view kSemVm = "http://www.sams-projekt.de/ontologies/V-model#";
inline constexpr std::string_view kOmdoc = "http://omdoc.org/ontology#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view kSd = "http://www.sams-projekt.de/ontologies/SAMSDocs#";
}  // namespace iri

rdf::Iri vm(std::string_view local);
rdf::Iri sem_vm(std::string_view local);
rdf::Iri omdoc(std::string_view local);
rdf::Iri dc(std::string_view local);
rdf::Iri foaf(std::string_view local);
rdf::Iri sd(std::string_view local);

struct Namespace {
  std::string prefix;
  std::string iri;
  Dimension dimension;
};

struct TermEntry {
  rdf::Iri iri;
  std::string curie;
  Dimension dimension;
};

class VocabularyRegistry {
 public:
  // Throws Error when `iri` is a prefix of (or prefixed by) a registered
  // namespace, or when the prefix is taken.
  void add_namespace(std::string prefix, std::string iri, Dimension dimension);
  // Registers a term of an existing namespace. `dimension` overrides the
  // namespace's dimension for this term only.
  void add_term(std::string_view prefix, std::string_view local,
                std::optional<Dimension> dimension = std::nullopt);

  // Looks up a registered `prefix:local` term.
  std::optional<TermEntry> lookup(std::string_view curie) const;

  // Term-level override first, then the longest registered namespace that
  // prefixes `p`; kUnknown otherwise.
  Dimension dimension_of(const rdf::Iri& p) const;

  const std::vector<Namespace>& namespaces() const { return namespaces_; }
  const std::vector<TermEntry>& terms() const { return terms_; }
  rdf::PrefixMap prefixes() const;

 private:
  std::vector<Namespace> namespaces_;
  std::vector<TermEntry> terms_;
};

// vm, semVM, omdoc, dc, foaf, sd, rdf, rdfs and xsd with their term sets.
const VocabularyRegistry& builtin_registry();

// Keeps exactly the triples whose predicate classifies into `keep`,
// preserving named-graph membership.
store::Dataset filter_by_dimensions(const store::Dataset& ds, const std::set<Dimension>& keep,
                                    const VocabularyRegistry& registry = builtin_registry());

}  // namespace docgraph::vocab
