#pragma once

#include <string_view>

#include "docgraph/rdf/term.hpp"

namespace docgraph::rdf {

enum class Ordering { kLess, kEqual, kGreater, kIncomparable };

std::string_view to_string(Ordering o);

// Orders two terms for FILTER comparisons.
//
// Identical terms are kEqual. Otherwise xsd:date literals compare
// chronologically, xsd:integer/xsd:decimal literals numerically (across both
// types), and xsd:string literals by code point. Every other pairing,
// including IRIs, blank nodes and lexically malformed literals, is
// kIncomparable.
Ordering compare_terms(const Term& a, const Term& b);

}  // namespace docgraph::rdf
