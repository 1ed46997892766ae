#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "docgraph/error.hpp"
#include "docgraph/rdf/term.hpp"

namespace docgraph::rdf {

class UnknownPrefix : public Error {
 public:
  explicit UnknownPrefix(std::string prefix)
      : Error("unknown prefix '" + prefix + "'"), prefix_(std::move(prefix)) {}

  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

// Maps prefix labels to namespace IRIs. The empty prefix is a valid key.
class PrefixMap {
 public:
  PrefixMap() = default;

  // Adds or replaces a binding. The namespace must itself be a valid IRI.
  void set(std::string prefix, std::string namespace_iri);
  bool contains(std::string_view prefix) const;
  std::optional<std::string> find(std::string_view prefix) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Splits `prefix:local` at the first colon. Returns nullopt when there is none.
std::optional<std::pair<std::string_view, std::string_view>> split_curie(std::string_view curie);

// Expands `prefix:local` to namespace + local.
// Throws UnknownPrefix when the prefix is not bound, InvalidTerm when `curie`
// has no colon or the result is not a valid IRI.
Iri expand_curie(std::string_view curie, const PrefixMap& prefixes);

}  // namespace docgraph::rdf
