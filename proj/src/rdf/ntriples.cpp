#include "docgraph/rdf/ntriples.hpp"

#include <cctype>
#include <cstdint>

namespace docgraph::rdf {

namespace {

void escape_into(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string parse_iriref(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  ++pos;  // '<'
  const auto end = text.find('>', pos);
  if (end == std::string_view::npos) throw TermSyntaxError(start, "unterminated IRI");
  std::string value(text.substr(pos, end - pos));
  pos = end + 1;
  if (!Iri::is_valid(value)) throw TermSyntaxError(start, "invalid IRI <" + value + ">");
  return value;
}

}  // namespace

std::string serialize_term(const Term& t) {
  std::string out;
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Iri>) {
          out.reserve(v.str().size() + 2);
          out += '<';
          out += v.str();
          out += '>';
        } else if constexpr (std::is_same_v<V, BlankNode>) {
          out += "_:";
          out += v.label();
        } else {
          out += '"';
          escape_into(out, v.lexical);
          out += '"';
          if (v.datatype != xsd("string")) {
            out += "^^<";
            out += v.datatype.str();
            out += '>';
          }
        }
      },
      t);
  return out;
}

std::string serialize_triple(const Triple& t) {
  return serialize_term(t.subject) + " " + serialize_term(t.predicate) + " " +
         serialize_term(t.object) + " .";
}

Term parse_term_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw TermSyntaxError(pos, "expected a term");
  const std::size_t start = pos;
  const char c = text[pos];
  if (c == '<') return Iri(parse_iriref(text, pos));
  if (c == '_') {
    if (pos + 1 >= text.size() || text[pos + 1] != ':') {
      throw TermSyntaxError(start, "expected '_:' blank node prefix");
    }
    pos += 2;
    const std::size_t label_start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string label(text.substr(label_start, pos - label_start));
    if (!BlankNode::is_valid_label(label)) {
      throw TermSyntaxError(start, "invalid blank node label '" + label + "'");
    }
    return BlankNode(label);
  }
  if (c == '"') {
    ++pos;
    std::string lexical;
    bool closed = false;
    while (pos < text.size()) {
      const char ch = text[pos++];
      if (ch == '"') {
        closed = true;
        break;
      }
      if (ch == '\n' || ch == '\r') throw TermSyntaxError(pos - 1, "raw line break in literal");
      if (ch != '\\') {
        lexical += ch;
        continue;
      }
      if (pos >= text.size()) break;
      const char esc = text[pos++];
      switch (esc) {
        case '"': lexical += '"'; break;
        case '\\': lexical += '\\'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'f': lexical += '\f'; break;
        case '\'': lexical += '\''; break;
        case 'u':
        case 'U': {
          const std::size_t digits = esc == 'u' ? 4 : 8;
          if (pos + digits > text.size()) throw TermSyntaxError(pos, "truncated \\u escape");
          std::uint32_t cp = 0;
          for (std::size_t k = 0; k < digits; ++k) {
            const char h = text[pos + k];
            cp <<= 4;
            if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
            else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
            else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
            else throw TermSyntaxError(pos + k, "bad hex digit in escape");
          }
          pos += digits;
          append_utf8(lexical, cp);
          break;
        }
        default:
          throw TermSyntaxError(pos - 2, std::string("unknown escape \\") + esc);
      }
    }
    if (!closed) throw TermSyntaxError(start, "unterminated literal");
    if (pos < text.size() && text[pos] == '@') {
      throw TermSyntaxError(pos, "language-tagged literals are not supported");
    }
    if (text.substr(pos).starts_with("^^")) {
      pos += 2;
      if (pos >= text.size() || text[pos] != '<') throw TermSyntaxError(pos, "expected datatype IRI");
      return Literal(std::move(lexical), Iri(parse_iriref(text, pos)));
    }
    return Literal(std::move(lexical));
  }
  throw TermSyntaxError(start, std::string("unexpected character '") + c + "'");
}

Term parse_term(std::string_view text) {
  std::size_t pos = 0;
  Term t = parse_term_at(text, pos);
  if (pos != text.size()) throw TermSyntaxError(pos, "trailing characters after term");
  return t;
}

}  // namespace docgraph::rdf
