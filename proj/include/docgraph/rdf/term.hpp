#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "docgraph/error.hpp"

namespace docgraph::rdf {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

// An absolute IRI. Validation is syntactic only: a scheme followed by ':',
// no whitespace, no control characters and none of `<>"`.
class Iri {
 public:
  explicit Iri(std::string value);

  static bool is_valid(std::string_view text);

  const std::string& str() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

// A blank node. Labels match [A-Za-z][A-Za-z0-9]*.
class BlankNode {
 public:
  explicit BlankNode(std::string label);

  static bool is_valid_label(std::string_view label);

  const std::string& label() const { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

Iri xsd(std::string_view local);
Iri rdf_type();

// A typed literal. The lexical form is not checked against the datatype here;
// use `is_well_formed` for that (malformed dates must stay representable so
// that validation can report them).
struct Literal {
  std::string lexical;
  Iri datatype;

  explicit Literal(std::string lexical_form);
  Literal(std::string lexical_form, Iri type);

  bool is_well_formed() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

// A subject-predicate-object statement. Subjects are IRIs or blank nodes.
struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  Triple(Term s, Iri p, Term o);

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Date helpers shared by comparison and validation.
bool is_valid_xsd_date(std::string_view lexical);

}  // namespace docgraph::rdf

template <>
struct std::hash<docgraph::rdf::Term> {
  std::size_t operator()(const docgraph::rdf::Term& t) const noexcept;
};
