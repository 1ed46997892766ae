#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "docgraph/error.hpp"
#include "docgraph/rdf/term.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::services {

enum class CertState { kUnreviewed, kApproved, kRejected };

std::string_view to_string(CertState s);
std::optional<CertState> parse_cert_state(std::string_view s);

class StateFileError : public Error {
 public:
  using Error::Error;
};

// Review outcome per subject; subjects not in the map are unreviewed.
class CertificationState {
 public:
  CertState get(const rdf::Iri& subject) const;
  void set(const rdf::Iri& subject, CertState state);

  const std::map<rdf::Iri, CertState>& entries() const { return entries_; }

  friend bool operator==(const CertificationState&, const CertificationState&) = default;

 private:
  std::map<rdf::Iri, CertState> entries_;
};

// Marks the subject approved. Approval does not propagate.
CertificationState approve(CertificationState state, const rdf::Iri& subject);

// Marks the object, its impact set and the documents containing any of them
// rejected, overriding earlier approvals.
CertificationState reject(const store::Dataset& ds, CertificationState state,
                          const rdf::Iri& object);

// `iri<TAB>state` lines sorted by IRI, LF endings; unreviewed entries omitted.
std::string write_state(const CertificationState& state);
// Inverse of write_state. Throws StateFileError with the offending line.
CertificationState read_state(std::string_view text);

}  // namespace docgraph::services
