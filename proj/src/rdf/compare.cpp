#include "docgraph/rdf/compare.hpp"

#include <optional>
#include <string>

namespace docgraph::rdf {

namespace {

enum class Kind { kString, kDate, kNumeric, kOther };

Kind kind_of(const Literal& l) {
  const std::string_view dt = l.datatype.str();
  if (!dt.starts_with(ns::kXsd)) return Kind::kOther;
  const std::string_view local = dt.substr(ns::kXsd.size());
  if (local == "string") return Kind::kString;
  if (local == "date") return Kind::kDate;
  if (local == "integer" || local == "decimal") return Kind::kNumeric;
  return Kind::kOther;
}

// Canonical decimal: sign, integer digits without leading zeros, fraction
// digits without trailing zeros.
struct Decimal {
  bool negative = false;
  std::string integer;
  std::string fraction;
};

std::optional<Decimal> parse_decimal(std::string_view s) {
  Decimal d;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) d.negative = s[i++] == '-';
  const std::size_t int_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  std::string_view int_part = s.substr(int_start, i - int_start);
  std::string_view frac_part;
  if (i < s.size() && s[i] == '.') {
    const std::size_t frac_start = ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    frac_part = s.substr(frac_start, i - frac_start);
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty())) return std::nullopt;
  while (!int_part.empty() && int_part.front() == '0') int_part.remove_prefix(1);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
  d.integer = std::string(int_part);
  d.fraction = std::string(frac_part);
  if (d.integer.empty() && d.fraction.empty()) d.negative = false;  // -0 == 0
  return d;
}

int compare_magnitude(const Decimal& a, const Decimal& b) {
  if (a.integer.size() != b.integer.size()) return a.integer.size() < b.integer.size() ? -1 : 1;
  if (const int c = a.integer.compare(b.integer); c != 0) return c < 0 ? -1 : 1;
  const int c = a.fraction.compare(b.fraction);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Ordering from_int(int c) {
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

Ordering compare_numeric(const Literal& a, const Literal& b) {
  const auto da = parse_decimal(a.lexical);
  const auto db = parse_decimal(b.lexical);
  if (!da || !db) return Ordering::kIncomparable;
  if (a.datatype == xsd("integer") && a.lexical.find('.') != std::string::npos) {
    return Ordering::kIncomparable;
  }
  if (b.datatype == xsd("integer") && b.lexical.find('.') != std::string::npos) {
    return Ordering::kIncomparable;
  }
  if (da->negative != db->negative) return da->negative ? Ordering::kLess : Ordering::kGreater;
  const int mag = compare_magnitude(*da, *db);
  return from_int(da->negative ? -mag : mag);
}

}  // namespace

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "LessThan";
    case Ordering::kEqual: return "Equal";
    case Ordering::kGreater: return "GreaterThan";
    case Ordering::kIncomparable: return "Incomparable";
  }
  return "?";
}

Ordering compare_terms(const Term& a, const Term& b) {
  if (a == b) return Ordering::kEqual;
  const auto* la = std::get_if<Literal>(&a);
  const auto* lb = std::get_if<Literal>(&b);
  if (la == nullptr || lb == nullptr) return Ordering::kIncomparable;
  const Kind ka = kind_of(*la);
  const Kind kb = kind_of(*lb);
  if (ka != kb || ka == Kind::kOther) return Ordering::kIncomparable;
  switch (ka) {
    case Kind::kString:
      // std::string compares bytes; UTF-8 byte order equals code point order.
      return from_int(la->lexical.compare(lb->lexical));
    case Kind::kDate:
      // YYYY-MM-DD with four-digit years sorts chronologically as text.
      if (!is_valid_xsd_date(la->lexical) || !is_valid_xsd_date(lb->lexical)) {
        return Ordering::kIncomparable;
      }
      return from_int(la->lexical.compare(lb->lexical));
    case Kind::kNumeric:
      return compare_numeric(*la, *lb);
    case Kind::kOther:
      break;
  }
  return Ordering::kIncomparable;
}

}  // namespace docgraph::rdf
