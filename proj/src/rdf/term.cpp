#include "docgraph/rdf/term.hpp"

#include <chrono>
#include <charconv>

namespace docgraph::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool Iri::is_valid(std::string_view text) {
  if (text.empty() || !is_alpha(text.front())) return false;
  std::size_t i = 1;
  while (i < text.size() && (is_alpha(text[i]) || is_digit(text[i]) || text[i] == '+' ||
                             text[i] == '-' || text[i] == '.')) {
    ++i;
  }
  if (i >= text.size() || text[i] != ':') return false;
  for (unsigned char c : text) {
    if (c <= 0x20 || c == 0x7f || c == '<' || c == '>' || c == '"') return false;
  }
  return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw InvalidTerm("invalid IRI: '" + value_ + "'");
}

bool BlankNode::is_valid_label(std::string_view label) {
  if (label.empty() || !is_alpha(label.front())) return false;
  for (char c : label) {
    if (!is_alpha(c) && !is_digit(c)) return false;
  }
  return true;
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) throw InvalidTerm("invalid blank node label: '" + label_ + "'");
}

Iri xsd(std::string_view local) { return Iri(std::string(ns::kXsd) + std::string(local)); }

Iri rdf_type() { return Iri(std::string(ns::kRdf) + "type"); }

Literal::Literal(std::string lexical_form)
    : lexical(std::move(lexical_form)), datatype(xsd("string")) {}

Literal::Literal(std::string lexical_form, Iri type)
    : lexical(std::move(lexical_form)), datatype(std::move(type)) {}

bool Literal::is_well_formed() const {
  if (datatype == xsd("date")) return is_valid_xsd_date(lexical);
  return true;
}

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (is_literal(subject)) throw InvalidTerm("literal in subject position");
}

bool is_valid_xsd_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!is_digit(s[i])) return false;
  }
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  std::from_chars(s.data(), s.data() + 4, y);
  std::from_chars(s.data() + 5, s.data() + 7, m);
  std::from_chars(s.data() + 8, s.data() + 10, d);
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                        std::chrono::day{d}};
  return ymd.ok();
}

}  // namespace docgraph::rdf

std::size_t std::hash<docgraph::rdf::Term>::operator()(
    const docgraph::rdf::Term& t) const noexcept {
  using namespace docgraph::rdf;
  const std::hash<std::string> h;
  std::size_t seed = t.index() * 0x9e3779b97f4a7c15ULL;
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Iri>) {
          seed ^= h(v.str());
        } else if constexpr (std::is_same_v<V, BlankNode>) {
          seed ^= h(v.label());
        } else {
          seed ^= h(v.lexical) + 0x9e3779b9 + (h(v.datatype.str()) << 6);
        }
      },
      t);
  return seed;
}
