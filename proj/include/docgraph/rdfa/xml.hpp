#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "docgraph/error.hpp"

namespace docgraph::rdfa {

class XmlSyntaxError : public Error {
 public:
  XmlSyntaxError(SourcePosition pos, const std::string& message)
      : Error(to_string(pos) + ": " + message), position_(pos), message_(message) {}

  SourcePosition position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  SourcePosition position_;
  std::string message_;
};

// An element of a parsed XML tree. Namespace declarations are kept as plain
// attributes (`xmlns:p`); names keep their prefixes.
struct XmlElement {
  // Index into `elements` or a run of character data.
  using Content = std::variant<std::size_t, std::string>;

  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;  // document order
  std::vector<XmlElement> elements;
  std::vector<Content> content;  // children in document order
  SourcePosition position;

  const std::string* attribute(std::string_view key) const;

  void append_text(std::string text);
  void append_element(XmlElement child);

  // All descendant character data, in document order, unnormalized.
  std::string text() const;
};

// Parses a UTF-8 XML document. Honors the five predefined entities and
// numeric character references; a DOCTYPE is skipped without expansion.
XmlElement parse_xml(std::string_view text);

}  // namespace docgraph::rdfa
