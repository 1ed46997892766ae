#include "docgraph/collection/validate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "docgraph/rdf/ntriples.hpp"
#include "docgraph/vocab/registry.hpp"

namespace docgraph::collection {

using rdf::Term;

std::string_view to_string(Severity s) { return s == Severity::kError ? "error" : "warning"; }

bool ValidationReport::has_errors() const { return count(Severity::kError) > 0; }

std::size_t ValidationReport::count(Severity s) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [s](const Finding& f) { return f.severity == s; }));
}

namespace {

bool is_document_predicate(const rdf::Iri& p) {
  static const std::set<rdf::Iri> predicates{
      vocab::omdoc("hasPart"), vocab::dc("title"),       vocab::dc("date"),
      vocab::dc("creator"),    vocab::dc("format"),      vocab::vm("responsible"),
      vocab::vm("reviewer")};
  return predicates.contains(p);
}

void sort_findings(std::vector<Finding>& findings) {
  std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.document, a.message, a.severity) < std::tie(b.document, b.message, b.severity);
  });
}

}  // namespace

ValidationReport validate(const store::Dataset& ds) {
  const rdf::Iri has_part = vocab::omdoc("hasPart");
  std::vector<Finding> findings;
  const auto report_on = [&](Severity severity, const Term& object, const std::string& message) {
    auto containers = ds.subjects(has_part, object);
    if (containers.empty()) containers.push_back(object);
    for (auto& d : containers) findings.push_back({severity, std::move(d), message});
  };

  std::set<Term> documents;
  for (const auto& t : ds.triples()) {
    if (is_document_predicate(t.predicate)) documents.insert(t.subject);
    if (const auto* lit = std::get_if<rdf::Literal>(&t.object)) {
      if (lit->datatype == rdf::xsd("date") && !lit->is_well_formed()) {
        findings.push_back({Severity::kError, t.subject,
                            "malformed xsd:date " + rdf::serialize_term(t.object) + " on " +
                                rdf::serialize_term(t.predicate)});
      }
    }
  }

  for (const auto& t : ds.with_predicate(vocab::sem_vm("refines"))) {
    if (ds.subjects(has_part, t.object).empty()) {
      report_on(Severity::kError, t.subject,
                "dangling semVM:refines target " + rdf::serialize_term(t.object) + " of " +
                    rdf::serialize_term(t.subject));
    }
  }

  for (const auto& d : documents) {
    if (ds.objects(d, vocab::vm("responsible")).empty()) {
      findings.push_back({Severity::kWarning, d, "document has no vm:responsible"});
    }
  }

  for (const auto& symbol : ds.subjects(rdf::rdf_type(), Term(vocab::omdoc("Symbol")))) {
    if (ds.objects(symbol, vocab::sd("definedBy")).empty()) {
      report_on(Severity::kWarning, symbol,
                "symbol " + rdf::serialize_term(symbol) + " has no sd:definedBy");
    }
  }

  sort_findings(findings);
  findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
  return {std::move(findings)};
}

ValidationReport validate(const IngestResult& ingested) {
  ValidationReport report = validate(ingested.dataset);
  for (const auto& w : ingested.warnings) {
    report.findings.push_back({Severity::kWarning, Term(w.document),
                               w.path.string() + ":" + to_string(w.warning.position) + ": " +
                                   w.warning.message});
  }
  sort_findings(report.findings);
  return report;
}

}  // namespace docgraph::collection
