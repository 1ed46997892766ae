#include "lexer.hpp"

#include <algorithm>
#include <cctype>

namespace docgraph::sparql::detail {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_pn_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.' ||
         (static_cast<unsigned char>(c) >= 0x80);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        out.push_back({TokenKind::kEnd, "", where_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

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

  [[noreturn]] void fail(SourcePosition at, const std::string& message) const {
    throw QuerySyntaxError(at, message);
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      if (is_space(peek())) {
        advance();
      } else if (peek() == '#') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  // `<` starts an IRI when a matching `>` follows with no forbidden characters.
  std::size_t iri_end() const {
    for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '>') return i;
      if (is_space(c) || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`' || c == '\\') {
        return std::string_view::npos;
      }
    }
    return std::string_view::npos;
  }

  Token next() {
    const SourcePosition start = where_;
    const char c = peek();
    if (c == '<') {
      if (const auto end = iri_end(); end != std::string_view::npos) {
        std::string iri(text_.substr(pos_ + 1, end - pos_ - 1));
        advance(end + 1 - pos_);
        return {TokenKind::kIriRef, std::move(iri), start};
      }
      if (peek(1) == '=') {
        advance(2);
        return {TokenKind::kOperator, "<=", start};
      }
      advance();
      return {TokenKind::kOperator, "<", start};
    }
    if (c == '>') {
      if (peek(1) == '=') {
        advance(2);
        return {TokenKind::kOperator, ">=", start};
      }
      advance();
      return {TokenKind::kOperator, ">", start};
    }
    if (c == '=') {
      advance();
      return {TokenKind::kOperator, "=", start};
    }
    if (c == '!') {
      if (peek(1) != '=') fail(start, "expected '!='");
      advance(2);
      return {TokenKind::kOperator, "!=", start};
    }
    if (c == '^') {
      if (peek(1) != '^') fail(start, "expected '^^'");
      advance(2);
      return {TokenKind::kPunct, "^^", start};
    }
    if (c == '{' || c == '}' || c == '(' || c == ')' || c == ';' || c == ',') {
      advance();
      return {TokenKind::kPunct, std::string(1, c), start};
    }
    if (c == '.' && !is_digit(peek(1))) {
      advance();
      return {TokenKind::kPunct, ".", start};
    }
    if (c == '?' || c == '$') {
      advance();
      const std::size_t name_start = pos_;
      while (is_alpha(peek()) || is_digit(peek()) || peek() == '_') advance();
      if (pos_ == name_start) fail(start, "expected variable name");
      return {TokenKind::kVariable, std::string(text_.substr(name_start, pos_ - name_start)), start};
    }
    if (c == '"' || c == '\'') return string_literal(start);
    if (is_digit(c) || c == '.' || ((c == '+' || c == '-') && (is_digit(peek(1)) || peek(1) == '.'))) {
      return number(start);
    }
    if (is_alpha(c) || c == ':' || c == '_') return word(start);
    fail(start, std::string("unexpected character '") + c + "'");
  }

  Token string_literal(SourcePosition start) {
    const char quote = peek();
    advance();
    std::string value;
    for (;;) {
      if (pos_ >= text_.size() || peek() == '\n') fail(start, "unterminated string literal");
      const char ch = peek();
      if (ch == quote) {
        advance();
        return {TokenKind::kString, std::move(value), start};
      }
      if (ch == '\\') {
        const char esc = peek(1);
        switch (esc) {
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 't': value += '\t'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          default: fail(where_, std::string("unknown escape '\\") + esc + "'");
        }
        advance(2);
        continue;
      }
      value += ch;
      advance();
    }
  }

  Token number(SourcePosition start) {
    const std::size_t begin = pos_;
    if (peek() == '+' || peek() == '-') advance();
    while (is_digit(peek())) advance();
    bool decimal = false;
    if (peek() == '.' && is_digit(peek(1))) {
      decimal = true;
      advance();
      while (is_digit(peek())) advance();
    }
    std::string lexical(text_.substr(begin, pos_ - begin));
    if (lexical.empty() || lexical == "+" || lexical == "-") fail(start, "malformed number");
    return {decimal ? TokenKind::kDecimal : TokenKind::kInteger, std::move(lexical), start};
  }

  Token word(SourcePosition start) {
    const std::size_t begin = pos_;
    while (is_pn_char(peek()) && peek() != '.') advance();
    // A prefix may contain dots, but not end with one.
    while (peek() == '.' && is_pn_char(peek(1)) && peek(1) != '.') {
      advance();
      while (is_pn_char(peek()) && peek() != '.') advance();
    }
    if (peek() == ':') {
      advance();
      while (is_pn_char(peek()) || peek() == ':') {
        if (peek() == '.' && !(is_pn_char(peek(1)) || peek(1) == ':')) break;
        advance();
      }
      return {TokenKind::kPrefixedName, std::string(text_.substr(begin, pos_ - begin)), start};
    }
    std::string w(text_.substr(begin, pos_ - begin));
    if (w == "a") return {TokenKind::kA, w, start};
    std::string upper = w;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (upper == "PREFIX" || upper == "BASE" || upper == "SELECT" || upper == "WHERE" ||
        upper == "UNION" || upper == "FILTER") {
      return {TokenKind::kKeyword, upper, start};
    }
    fail(start, "unexpected word '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourcePosition where_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace docgraph::sparql::detail
