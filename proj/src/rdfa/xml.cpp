#include "docgraph/rdfa/xml.hpp"

#include <cstdint>

namespace docgraph::rdfa {

const std::string* XmlElement::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

void XmlElement::append_text(std::string text) {
  if (text.empty()) return;
  if (!content.empty()) {
    if (auto* last = std::get_if<std::string>(&content.back())) {
      *last += text;
      return;
    }
  }
  content.emplace_back(std::move(text));
}

void XmlElement::append_element(XmlElement child) {
  elements.push_back(std::move(child));
  content.emplace_back(elements.size() - 1);
}

std::string XmlElement::text() const {
  std::string out;
  for (const auto& c : content) {
    if (const auto* s = std::get_if<std::string>(&c)) {
      out += *s;
    } else {
      out += elements[std::get<std::size_t>(c)].text();
    }
  }
  return out;
}

namespace {

bool is_name_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || c >= 0x80;
}

bool is_name_char(unsigned char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

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

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    if (text_.starts_with("\xEF\xBB\xBF")) advance(3);
  }

  XmlElement document() {
    skip_misc();
    if (at_end() || peek() != '<') fail("expected root element");
    XmlElement root = element();
    skip_misc();
    if (!at_end()) fail("content after the root element");
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool looking_at(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++where_.line;
        where_.column = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++where_.column;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw XmlSyntaxError(where_, message); }
  [[noreturn]] void fail_at(SourcePosition at, const std::string& message) const {
    throw XmlSyntaxError(at, message);
  }

  void expect(std::string_view s) {
    if (!looking_at(s)) fail("expected '" + std::string(s) + "'");
    advance(s.size());
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) advance();
  }

  void skip_until(std::string_view terminator, const char* what) {
    const SourcePosition start = where_;
    const auto end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) fail_at(start, std::string("unterminated ") + what);
    advance(end + terminator.size() - pos_);
  }

  // Comments, processing instructions, XML declaration, DOCTYPE, whitespace.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (looking_at("<!--")) {
        skip_until("-->", "comment");
      } else if (looking_at("<?")) {
        skip_until("?>", "processing instruction");
      } else if (looking_at("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_doctype() {
    const SourcePosition start = where_;
    int depth = 0;
    while (!at_end()) {
      const char c = peek();
      advance();
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth == 0) return;
    }
    fail_at(start, "unterminated DOCTYPE");
  }

  std::string name() {
    if (at_end() || !is_name_start(static_cast<unsigned char>(peek()))) fail("expected a name");
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  void reference(std::string& out) {
    const SourcePosition start = where_;
    advance();  // '&'
    const auto semi = text_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) fail_at(start, "malformed entity reference");
    const std::string_view ref = text_.substr(pos_, semi - pos_);
    advance(ref.size() + 1);
    if (ref == "lt") out += '<';
    else if (ref == "gt") out += '>';
    else if (ref == "amp") out += '&';
    else if (ref == "quot") out += '"';
    else if (ref == "apos") out += '\'';
    else if (ref.starts_with('#') && ref.size() > 1) {
      const bool hex = ref[1] == 'x';
      const std::string_view digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail_at(start, "empty character reference");
      std::uint32_t cp = 0;
      for (char c : digits) {
        std::uint32_t v = 0;
        if (c >= '0' && c <= '9') v = static_cast<std::uint32_t>(c - '0');
        else if (hex && c >= 'a' && c <= 'f') v = static_cast<std::uint32_t>(c - 'a' + 10);
        else if (hex && c >= 'A' && c <= 'F') v = static_cast<std::uint32_t>(c - 'A' + 10);
        else fail_at(start, "bad character reference");
        cp = cp * (hex ? 16 : 10) + v;
        if (cp > 0x10FFFF) fail_at(start, "character reference out of range");
      }
      if (cp == 0) fail_at(start, "character reference to NUL");
      append_utf8(out, cp);
    } else {
      fail_at(start, "undefined entity '&" + std::string(ref) + ";'");
    }
  }

  std::string attribute_value() {
    if (peek() != '"' && peek() != '\'') fail("expected quoted attribute value");
    const char quote = peek();
    const SourcePosition start = where_;
    advance();
    std::string value;
    for (;;) {
      if (at_end()) fail_at(start, "unterminated attribute value");
      const char c = peek();
      if (c == quote) {
        advance();
        return value;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        reference(value);
        continue;
      }
      value += is_space(c) ? ' ' : c;
      advance();
    }
  }

  XmlElement element() {
    XmlElement el;
    el.position = where_;
    expect("<");
    el.name = name();
    for (;;) {
      const bool had_space = !at_end() && is_space(peek());
      skip_space();
      if (at_end()) fail_at(el.position, "unclosed tag <" + el.name + ">");
      if (looking_at("/>")) {
        advance(2);
        return el;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (!had_space) fail("expected whitespace before attribute");
      const SourcePosition attr_pos = where_;
      std::string key = name();
      skip_space();
      expect("=");
      skip_space();
      std::string value = attribute_value();
      if (el.attribute(key) != nullptr) fail_at(attr_pos, "duplicate attribute '" + key + "'");
      el.attributes.emplace_back(std::move(key), std::move(value));
    }
    content(el);
    return el;
  }

  void content(XmlElement& el) {
    std::string text;
    for (;;) {
      if (at_end()) fail_at(el.position, "unclosed tag <" + el.name + ">");
      const char c = peek();
      if (c == '&') {
        reference(text);
      } else if (c != '<') {
        text += c;
        advance();
      } else if (looking_at("</")) {
        el.append_text(std::move(text));
        advance(2);
        const SourcePosition close_pos = where_;
        const std::string closing = name();
        skip_space();
        expect(">");
        if (closing != el.name) {
          fail_at(close_pos, "mismatched end tag </" + closing + "> for <" + el.name + ">");
        }
        return;
      } else if (looking_at("<!--")) {
        skip_until("-->", "comment");
      } else if (looking_at("<![CDATA[")) {
        advance(9);
        const SourcePosition start = where_;
        const auto end = text_.find("]]>", pos_);
        if (end == std::string_view::npos) fail_at(start, "unterminated CDATA section");
        text += text_.substr(pos_, end - pos_);
        advance(end + 3 - pos_);
      } else if (looking_at("<?")) {
        skip_until("?>", "processing instruction");
      } else {
        el.append_text(std::move(text));
        text.clear();
        el.append_element(element());
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourcePosition where_;
};

}  // namespace

XmlElement parse_xml(std::string_view text) { return Parser(text).document(); }

}  // namespace docgraph::rdfa
