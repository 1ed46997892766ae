#include "docgraph/services/services.hpp"

#include <deque>

#include "docgraph/rdf/compare.hpp"
#include "docgraph/rdf/ntriples.hpp"
#include "docgraph/vocab/registry.hpp"

namespace docgraph::services {

using rdf::Term;

namespace {

bool later_than(const store::Dataset& ds, const Term& document, const rdf::Literal& cutoff) {
  for (const auto& date : ds.objects(document, vocab::dc("date"))) {
    if (rdf::compare_terms(date, Term(cutoff)) == rdf::Ordering::kGreater) return true;
  }
  return false;
}

std::set<Term> dependents_closure(const store::Dataset& ds, const Term& root) {
  const rdf::Iri refines = vocab::sem_vm("refines");
  const rdf::Iri used_in = vocab::omdoc("occursInDefinitionOf");
  std::set<Term> seen{root};
  std::deque<Term> queue{root};
  const auto visit = [&](Term t) {
    if (seen.insert(t).second) queue.push_back(std::move(t));
  };
  while (!queue.empty()) {
    const Term current = std::move(queue.front());
    queue.pop_front();
    for (auto& t : ds.subjects(refines, current)) visit(std::move(t));
    for (auto& t : ds.objects(current, used_in)) visit(std::move(t));
  }
  return seen;
}

std::set<Term> containers(const store::Dataset& ds, const std::set<Term>& objects) {
  const rdf::Iri has_part = vocab::omdoc("hasPart");
  std::set<Term> out;
  for (const auto& o : objects) {
    for (auto& d : ds.subjects(has_part, o)) out.insert(std::move(d));
  }
  return out;
}

}  // namespace

std::set<Substitute> find_substitute(const store::Dataset& ds, const rdf::Iri& employee,
                                     const rdf::Literal& cutoff) {
  const rdf::Iri responsible = vocab::vm("responsible");
  const rdf::Iri has_part = vocab::omdoc("hasPart");
  const rdf::Iri name = vocab::foaf("name");
  const std::vector<Term> own_documents = ds.subjects(responsible, Term(employee));
  if (own_documents.empty()) {
    throw UnknownEmployee("no document has " + employee.str() + " as responsible person");
  }

  std::set<Substitute> out;
  for (const auto& document : own_documents) {
    for (const auto& object : ds.objects(document, has_part)) {
      std::vector<Term> related = ds.objects(object, vocab::sem_vm("refines"));
      for (auto& t : ds.objects(object, vocab::omdoc("occursInDefinitionOf"))) {
        related.push_back(std::move(t));
      }
      for (const auto& other : related) {
        for (const auto& other_document : ds.subjects(has_part, other)) {
          if (!later_than(ds, other_document, cutoff)) continue;
          for (const auto& person : ds.objects(other_document, responsible)) {
            if (person == Term(employee)) continue;
            for (const auto& n : ds.objects(person, name)) {
              if (const auto* lit = std::get_if<rdf::Literal>(&n)) out.insert({person, lit->lexical});
            }
          }
        }
      }
    }
  }
  return out;
}

ImpactReport impact_set(const store::Dataset& ds, const rdf::Iri& object) {
  ImpactReport report{object, dependents_closure(ds, Term(object)), {}};
  report.documents = containers(ds, report.objects);
  return report;
}

std::set<Term> recertification_set(const store::Dataset& ds, const rdf::Literal& since) {
  std::set<Term> changed;
  for (const auto& t : ds.with_predicate(vocab::dc("date"))) {
    if (rdf::compare_terms(t.object, Term(since)) == rdf::Ordering::kGreater) changed.insert(t.subject);
  }
  std::set<Term> out = changed;
  for (const auto& document : changed) {
    for (const auto& object : ds.objects(document, vocab::omdoc("hasPart"))) {
      for (auto& d : containers(ds, dependents_closure(ds, object))) out.insert(std::move(d));
    }
  }
  return out;
}

std::set<Term> definition_lookup(const store::Dataset& ds, const rdf::Iri& symbol) {
  if (!ds.dictionary().find(Term(symbol))) {
    throw UnknownSymbol("symbol " + symbol.str() + " does not occur in the dataset");
  }
  const rdf::Iri defined_by = vocab::sd("definedBy");
  const rdf::Iri notation = vocab::sd("notation");
  std::set<Term> out;
  for (auto& d : ds.objects(Term(symbol), defined_by)) out.insert(std::move(d));
  for (const auto& display : ds.objects(Term(symbol), notation)) {
    for (const auto& other : ds.subjects(notation, display)) {
      if (!ds.contains(rdf::Triple(other, rdf::rdf_type(), Term(vocab::omdoc("Symbol"))))) continue;
      for (auto& d : ds.objects(other, defined_by)) out.insert(std::move(d));
    }
  }
  return out;
}

Coverage verification_coverage(const store::Dataset& ds) {
  const std::vector<Term> assertions_list = ds.subjects(rdf::rdf_type(), Term(vocab::omdoc("Assertion")));
  const std::set<Term> assertions(assertions_list.begin(), assertions_list.end());
  const Term verified_state(rdf::Literal("verified"));
  Coverage c;
  c.total = assertions.size();
  for (const auto& a : assertions) {
    for (const auto& proof : ds.subjects(vocab::omdoc("proves"), a)) {
      if (ds.contains(rdf::Triple(proof, vocab::sd("proofState"), verified_state))) {
        ++c.verified;
        break;
      }
    }
  }
  c.unverified = c.total - c.verified;
  return c;
}

std::set<Contact> whois(const store::Dataset& ds, const rdf::Iri& object) {
  const std::vector<Term> documents = ds.subjects(vocab::omdoc("hasPart"), Term(object));
  if (documents.empty()) throw OrphanObject("no document contains " + object.str());
  std::set<Contact> out;
  for (const auto& document : documents) {
    for (const char* role : {"responsible", "reviewer"}) {
      for (const auto& person : ds.objects(document, vocab::vm(role))) {
        bool named = false;
        for (const auto& n : ds.objects(person, vocab::foaf("name"))) {
          if (const auto* lit = std::get_if<rdf::Literal>(&n)) {
            out.insert({role, person, lit->lexical});
            named = true;
          }
        }
        if (!named) out.insert({role, person, ""});
      }
    }
  }
  return out;
}

std::string substitute_query(const rdf::Iri& employee, const rdf::Literal& cutoff) {
  std::string q;
  q += "# declaration of vocabulary (= dimension) namespace URIs\n";
  q += "PREFIX vm:    <" + std::string(vocab::iri::kVm) + ">\n";
  q += "PREFIX omdoc: <" + std::string(vocab::iri::kOmdoc) + ">                                 # OMDoc\n";
  q += "PREFIX semVM: <" + std::string(vocab::iri::kSemVm) + ">\n";
  q += "PREFIX dc:    <" + std::string(vocab::iri::kDc) + ">                     # Dublin Core\n";
  q += "PREFIX xsd:   <" + std::string(rdf::ns::kXsd) + ">           # XML Schema datatypes\n";
  q += "PREFIX foaf:  <" + std::string(vocab::iri::kFoaf) + ">\n";
  q += "\n";
  q += "SELECT ?potentialSubstituteName WHERE {\n";
  q += "  # for each document the employee is responsible for, get all of its parts\n";
  q += "  # i.e. any kind of semantic (sub)object in the document\n";
  q += "  ?document vm:responsible " + rdf::serialize_term(employee) + " ;\n";
  q += "            omdoc:hasPart  ?object .\n";
  q += "\n";
  q += "  # find other objects that are related to each ?object\n";
  q += "  # 1. in that ?object refines them via the V-model\n";
  q += "  { ?object semVM:refines ?relatedObject }\n";
  q += "  UNION\n";
  q += "  # 2. or in that they are other mathematical symbols defined in terms\n";
  q += "  #      of ?object (only applies if ?object itself is a symbol)\n";
  q += "  { ?object omdoc:occursInDefinitionOf ?relatedObject }\n";
  q += "\n";
  q += "  # find the document that contains the related object and the person\n";
  q += "  # responsible for that document ...\n";
  q += "  ?otherDocument omdoc:hasPart  ?relatedObject ;\n";
  q += "                 dc:date        ?date ;\n";
  q += "                 vm:responsible ?potentialSubstitute .\n";
  q += "  # (only considering documents that are sufficiently up to date)\n";
  const std::string date = cutoff.datatype == rdf::xsd("date") && cutoff.is_well_formed()
                               ? "\"" + cutoff.lexical + "\"^^xsd:date"
                               : rdf::serialize_term(cutoff);
  q += "  FILTER (?date > " + date + ")\n";
  q += "  # (the employee is not their own substitute)\n";
  q += "  FILTER (?potentialSubstitute != " + rdf::serialize_term(employee) + ")\n";
  q += "\n";
  q += "  # ... and the real name of that person\n";
  q += "  ?potentialSubstitute foaf:name ?potentialSubstituteName .\n";
  q += "}\n";
  return q;
}

}  // namespace docgraph::services
