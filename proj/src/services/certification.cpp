#include "docgraph/services/certification.hpp"

#include "docgraph/services/services.hpp"

namespace docgraph::services {

std::string_view to_string(CertState s) {
  switch (s) {
    case CertState::kUnreviewed: return "unreviewed";
    case CertState::kApproved: return "approved";
    case CertState::kRejected: return "rejected";
  }
  return "unreviewed";
}

std::optional<CertState> parse_cert_state(std::string_view s) {
  if (s == "unreviewed") return CertState::kUnreviewed;
  if (s == "approved") return CertState::kApproved;
  if (s == "rejected") return CertState::kRejected;
  return std::nullopt;
}

CertState CertificationState::get(const rdf::Iri& subject) const {
  auto it = entries_.find(subject);
  return it == entries_.end() ? CertState::kUnreviewed : it->second;
}

void CertificationState::set(const rdf::Iri& subject, CertState state) {
  if (state == CertState::kUnreviewed) {
    entries_.erase(subject);
  } else {
    entries_.insert_or_assign(subject, state);
  }
}

CertificationState approve(CertificationState state, const rdf::Iri& subject) {
  state.set(subject, CertState::kApproved);
  return state;
}

CertificationState reject(const store::Dataset& ds, CertificationState state,
                          const rdf::Iri& object) {
  const ImpactReport impact = impact_set(ds, object);
  state.set(object, CertState::kRejected);
  for (const auto* group : {&impact.objects, &impact.documents}) {
    for (const auto& t : *group) {
      // Blank nodes cannot be addressed in the state file.
      if (const auto* iri = std::get_if<rdf::Iri>(&t)) state.set(*iri, CertState::kRejected);
    }
  }
  return state;
}

std::string write_state(const CertificationState& state) {
  std::string out;
  for (const auto& [iri, s] : state.entries()) {
    out += iri.str();
    out += '\t';
    out += to_string(s);
    out += '\n';
  }
  return out;
}

CertificationState read_state(std::string_view text) {
  CertificationState state;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const auto where = "state file line " + std::to_string(line_no) + ": ";
    if (tab == std::string_view::npos) throw StateFileError(where + "expected 'iri<TAB>state'");
    const std::string_view iri = line.substr(0, tab);
    const auto s = parse_cert_state(line.substr(tab + 1));
    if (!s) throw StateFileError(where + "unknown state '" + std::string(line.substr(tab + 1)) + "'");
    if (!rdf::Iri::is_valid(iri)) throw StateFileError(where + "invalid IRI '" + std::string(iri) + "'");
    state.set(rdf::Iri(std::string(iri)), *s);
  }
  return state;
}

}  // namespace docgraph::services
