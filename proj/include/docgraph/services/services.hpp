#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "docgraph/error.hpp"
#include "docgraph/rdf/term.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::services {

class UnknownEmployee : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class OrphanObject : public Error {
 public:
  using Error::Error;
};

struct Substitute {
  rdf::Term person;
  std::string name;

  friend auto operator<=>(const Substitute&, const Substitute&) = default;
};

// Persons responsible for recent documents that contain objects related to
// the employee's documents. Starting from every document the employee is
// vm:responsible for, takes its omdoc:hasPart objects, follows
// semVM:refines or omdoc:occursInDefinitionOf to related objects, keeps the
// documents containing those whose dc:date is later than `cutoff`, and
// returns their vm:responsible persons with foaf:name. The employee is never
// their own substitute. Throws UnknownEmployee when the employee is
// responsible for nothing.
std::set<Substitute> find_substitute(const store::Dataset& ds, const rdf::Iri& employee,
                                     const rdf::Literal& cutoff);

struct ImpactReport {
  rdf::Iri root;
  std::set<rdf::Term> objects;    // always contains root
  std::set<rdf::Term> documents;  // containers (omdoc:hasPart) of objects
};

// Everything that depends on `object`: the transitive closure over inverse
// semVM:refines and forward omdoc:occursInDefinitionOf edges.
ImpactReport impact_set(const store::Dataset& ds, const rdf::Iri& object);

// Documents dated after `since`, plus every document containing an object
// impacted by an object of such a document.
std::set<rdf::Term> recertification_set(const store::Dataset& ds, const rdf::Literal& since);

// Definitions linked to `symbol` via sd:definedBy. When the symbol carries an
// sd:notation, definitions of every omdoc:Symbol sharing that notation are
// included, since equal display forms may denote different concepts.
// Throws UnknownSymbol when the IRI occurs in no triple.
std::set<rdf::Term> definition_lookup(const store::Dataset& ds, const rdf::Iri& symbol);

struct Coverage {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t unverified = 0;

  friend bool operator==(const Coverage&, const Coverage&) = default;
};

// Subjects typed omdoc:Assertion, split by whether some proof with
// sd:proofState "verified" omdoc:proves them.
Coverage verification_coverage(const store::Dataset& ds);

struct Contact {
  std::string role;  // "responsible" or "reviewer"
  rdf::Term person;
  std::string name;  // empty when the person has no foaf:name

  friend auto operator<=>(const Contact&, const Contact&) = default;
};

// vm:responsible and vm:reviewer persons of every document containing the
// object. Throws OrphanObject when no document contains it.
std::set<Contact> whois(const store::Dataset& ds, const rdf::Iri& object);

// Text of the substitute query for one employee and cutoff: the SPARQL form
// of find_substitute, with the date filter on ?date and self-exclusion.
std::string substitute_query(const rdf::Iri& employee, const rdf::Literal& cutoff);

}  // namespace docgraph::services
