#include "docgraph/sparql/parser.hpp"

#include <algorithm>
#include <set>

#include "docgraph/rdf/reference.hpp"
#include "docgraph/vocab/registry.hpp"
#include "lexer.hpp"

namespace docgraph::sparql {

using detail::Token;
using detail::TokenKind;

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kLess: return "<";
    case CompareOp::kGreater: return ">";
    case CompareOp::kLessEqual: return "<=";
    case CompareOp::kGreaterEqual: return ">=";
    case CompareOp::kEqual: return "=";
    case CompareOp::kNotEqual: return "!=";
  }
  return "?";
}

namespace {

void collect(const PatternTerm& t, std::vector<std::string>& out) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    if (std::find(out.begin(), out.end(), v->name()) == out.end()) out.push_back(v->name());
  }
}

void collect(const GroupPattern& g, std::vector<std::string>& out) {
  for (const auto& e : g.elements) {
    if (const auto* tp = std::get_if<TriplePattern>(&e)) {
      collect(tp->subject, out);
      collect(tp->predicate, out);
      collect(tp->object, out);
    } else if (const auto* u = std::get_if<Union>(&e)) {
      collect(*u->left, out);
      collect(*u->right, out);
    } else {
      const auto& f = std::get<Filter>(e).expr;
      collect(f.lhs, out);
      collect(f.rhs, out);
    }
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : tokens_(std::move(tokens)), options_(options), base_(options.base) {
    if (options_.use_fallback_prefixes) {
      fallback_ = options_.fallback_prefixes ? options_.fallback_prefixes : &builtin_prefixes();
    }
  }

  SelectQuery query() {
    prologue();
    expect_keyword("SELECT");
    projection();
    if (is_keyword("WHERE")) advance();
    query_.pattern = group();
    if (peek().kind != TokenKind::kEnd) fail(peek(), "unexpected content after query");
    const auto vars = variables_of(query_.pattern);
    for (std::size_t i = 0; i < query_.projection.size(); ++i) {
      if (std::find(vars.begin(), vars.end(), query_.projection[i]) == vars.end()) {
        fail_at(projection_positions_[i],
                "projected variable ?" + query_.projection[i] + " does not occur in the pattern");
      }
    }
    return std::move(query_);
  }

 private:
  static const rdf::PrefixMap& builtin_prefixes() {
    static const rdf::PrefixMap prefixes = vocab::builtin_registry().prefixes();
    return prefixes;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool is_keyword(std::string_view k) const {
    return peek().kind == TokenKind::kKeyword && peek().text == k;
  }
  bool is_punct(std::string_view p) const {
    return peek().kind == TokenKind::kPunct && peek().text == p;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw QuerySyntaxError(at.position, message);
  }
  [[noreturn]] void fail_at(SourcePosition at, const std::string& message) const {
    throw QuerySyntaxError(at, message);
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::kEnd) return "end of input";
    return "'" + t.text + "'";
  }

  void expect_keyword(std::string_view k) {
    if (!is_keyword(k)) fail(peek(), "expected " + std::string(k) + ", found " + describe(peek()));
    advance();
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) {
      fail(peek(), "expected '" + std::string(p) + "', found " + describe(peek()));
    }
    advance();
  }

  void prologue() {
    for (;;) {
      if (is_keyword("PREFIX")) {
        advance();
        const Token& name = advance();
        if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':' ||
            name.text.find(':') != name.text.size() - 1) {
          fail(name, "expected prefix name ending in ':'");
        }
        const rdf::Iri ns = iri_ref(advance());
        query_.prefixes.set(name.text.substr(0, name.text.size() - 1), ns.str());
      } else if (is_keyword("BASE")) {
        advance();
        base_ = iri_ref(advance()).str();
      } else {
        return;
      }
    }
  }

  void projection() {
    if (peek().kind != TokenKind::kVariable) fail(peek(), "expected at least one projected variable");
    while (peek().kind == TokenKind::kVariable) {
      const Token& v = advance();
      if (std::find(query_.projection.begin(), query_.projection.end(), v.text) ==
          query_.projection.end()) {
        query_.projection.push_back(v.text);
        projection_positions_.push_back(v.position);
      }
    }
  }

  rdf::Iri iri_ref(const Token& t) {
    if (t.kind != TokenKind::kIriRef) fail(t, "expected <IRI>, found " + describe(t));
    try {
      return rdf::resolve_reference(t.text, rdf::Iri(base_));
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  rdf::Iri prefixed_name(const Token& t) {
    const auto colon = t.text.find(':');
    const std::string prefix = t.text.substr(0, colon);
    if (!query_.prefixes.contains(prefix) && fallback_ != nullptr) {
      if (const auto ns = fallback_->find(prefix)) query_.prefixes.set(prefix, *ns);
    }
    try {
      return rdf::expand_curie(t.text, query_.prefixes);
    } catch (const rdf::UnknownPrefix&) {
      throw;
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  GroupPattern group() {
    expect_punct("{");
    GroupPattern g;
    while (!is_punct("}")) {
      const Token& t = peek();
      if (t.kind == TokenKind::kEnd) fail(t, "unterminated group, expected '}'");
      if (is_punct("{")) {
        GroupPattern left = group();
        if (!is_keyword("UNION")) fail(peek(), "expected UNION after nested group");
        while (is_keyword("UNION")) {
          advance();
          GroupPattern right = group();
          left = GroupPattern{{Union{std::make_shared<const GroupPattern>(std::move(left)),
                                     std::make_shared<const GroupPattern>(std::move(right))}}};
        }
        g.elements.push_back(std::move(left.elements.front()));
        if (is_punct(".")) advance();
      } else if (is_keyword("FILTER")) {
        advance();
        g.elements.emplace_back(Filter{filter()});
        if (is_punct(".")) advance();
      } else {
        triples_block(g);
      }
    }
    if (g.elements.empty()) fail(peek(), "empty group pattern");
    advance();  // '}'
    return g;
  }

  FilterExpr filter() {
    expect_punct("(");
    const Token& lhs_tok = peek();
    PatternTerm lhs = operand();
    const Token& op_tok = advance();
    if (op_tok.kind != TokenKind::kOperator) {
      fail(op_tok, "expected comparison operator, found " + describe(op_tok));
    }
    PatternTerm rhs = operand();
    expect_punct(")");
    if (!store::is_variable(lhs) && !store::is_variable(rhs)) {
      fail(lhs_tok, "FILTER comparison needs at least one variable");
    }
    CompareOp op = CompareOp::kEqual;
    if (op_tok.text == "<") op = CompareOp::kLess;
    else if (op_tok.text == ">") op = CompareOp::kGreater;
    else if (op_tok.text == "<=") op = CompareOp::kLessEqual;
    else if (op_tok.text == ">=") op = CompareOp::kGreaterEqual;
    else if (op_tok.text == "!=") op = CompareOp::kNotEqual;
    return FilterExpr{op, std::move(lhs), std::move(rhs)};
  }

  PatternTerm operand() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kVariable:
      case TokenKind::kIriRef:
      case TokenKind::kPrefixedName:
      case TokenKind::kString:
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
        return term();
      default:
        fail(t, "expected variable or term in FILTER, found " + describe(t));
    }
  }

  PatternTerm term() {
    const Token& t = advance();
    switch (t.kind) {
      case TokenKind::kVariable:
        return Variable(t.text);
      case TokenKind::kIriRef:
        return rdf::Term(iri_ref(t));
      case TokenKind::kPrefixedName:
        return rdf::Term(prefixed_name(t));
      case TokenKind::kInteger:
        return rdf::Term(rdf::Literal(t.text, rdf::xsd("integer")));
      case TokenKind::kDecimal:
        return rdf::Term(rdf::Literal(t.text, rdf::xsd("decimal")));
      case TokenKind::kString: {
        if (is_punct("^^")) {
          advance();
          const Token& dt = advance();
          if (dt.kind == TokenKind::kIriRef) return rdf::Term(rdf::Literal(t.text, iri_ref(dt)));
          if (dt.kind == TokenKind::kPrefixedName) {
            return rdf::Term(rdf::Literal(t.text, prefixed_name(dt)));
          }
          fail(dt, "expected datatype IRI after '^^'");
        }
        return rdf::Term(rdf::Literal(t.text));
      }
      default:
        fail(t, "expected a term, found " + describe(t));
    }
  }

  PatternTerm verb() {
    if (peek().kind == TokenKind::kA) {
      advance();
      return rdf::Term(rdf::rdf_type());
    }
    const Token& t = peek();
    if (t.kind != TokenKind::kVariable && t.kind != TokenKind::kIriRef &&
        t.kind != TokenKind::kPrefixedName) {
      fail(t, "expected predicate, found " + describe(t));
    }
    return term();
  }

  void triples_block(GroupPattern& g) {
    const Token& start = peek();
    if (start.kind != TokenKind::kVariable && start.kind != TokenKind::kIriRef &&
        start.kind != TokenKind::kPrefixedName && start.kind != TokenKind::kString &&
        start.kind != TokenKind::kInteger && start.kind != TokenKind::kDecimal) {
      fail(start, "expected triple pattern, found " + describe(start));
    }
    PatternTerm subject = term();
    for (;;) {
      PatternTerm predicate = verb();
      for (;;) {
        const Token& ot = peek();
        if (ot.kind == TokenKind::kPunct || ot.kind == TokenKind::kKeyword ||
            ot.kind == TokenKind::kEnd || ot.kind == TokenKind::kOperator) {
          fail(ot, "expected object, found " + describe(ot));
        }
        g.elements.emplace_back(TriplePattern{subject, predicate, term()});
        if (!is_punct(",")) break;
        advance();
      }
      if (!is_punct(";")) break;
      advance();
      // a trailing ';' is allowed before '.' or '}'
      if (is_punct(".") || is_punct("}")) break;
    }
    if (is_punct(".")) {
      advance();
    } else if (!is_punct("}") && !is_punct("{") && !is_keyword("FILTER")) {
      fail(peek(), "expected '.', ';', ',' or '}', found " + describe(peek()));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
  const rdf::PrefixMap* fallback_ = nullptr;
  std::string base_;
  SelectQuery query_;
  std::vector<SourcePosition> projection_positions_;
};

}  // namespace

std::vector<std::string> variables_of(const GroupPattern& group) {
  std::vector<std::string> out;
  collect(group, out);
  return out;
}

SelectQuery parse_query(std::string_view text, const ParseOptions& options) {
  return Parser(detail::tokenize(text), options).query();
}

}  // namespace docgraph::sparql
