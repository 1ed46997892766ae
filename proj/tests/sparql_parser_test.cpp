#include <gtest/gtest.h>

#include "docgraph/sparql/parser.hpp"
#include "support.hpp"

using namespace docgraph;
using namespace docgraph::rdf;
using namespace docgraph::sparql;

namespace {

std::size_t count_unions(const GroupPattern& g) {
  std::size_t n = 0;
  for (const auto& e : g.elements) {
    if (const auto* u = std::get_if<Union>(&e)) n += 1 + count_unions(*u->left) + count_unions(*u->right);
  }
  return n;
}

std::size_t count_filters(const GroupPattern& g) {
  std::size_t n = 0;
  for (const auto& e : g.elements) {
    if (std::holds_alternative<Filter>(e)) ++n;
    if (const auto* u = std::get_if<Union>(&e)) n += count_filters(*u->left) + count_filters(*u->right);
  }
  return n;
}

SourcePosition error_at(std::string_view text) {
  try {
    parse_query(text);
  } catch (const QuerySyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for: " << text;
  return {};
}

}  // namespace

TEST(ParseQuery, OriginalSubstituteQuery) {
  const auto q = parse_query(support::read_file(support::query_dir() / "substitute_original.rq"));
  EXPECT_EQ(q.projection, std::vector<std::string>{"potentialSubstituteName"});
  EXPECT_EQ(q.prefixes.size(), 6u);
  EXPECT_TRUE(q.prefixes.contains("foaf"));
  EXPECT_EQ(count_unions(q.pattern), 1u);
  EXPECT_EQ(count_filters(q.pattern), 1u);
  const Filter* f = nullptr;
  for (const auto& e : q.pattern.elements) {
    if (const auto* candidate = std::get_if<Filter>(&e)) f = candidate;
  }
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->expr.op, CompareOp::kGreater);
  EXPECT_EQ(f->expr.lhs, PatternTerm(Variable("otherDocument")));
  EXPECT_EQ(f->expr.rhs, PatternTerm(Term(Literal("2009-01-01", xsd("date")))));
}

TEST(ParseQuery, BundledVariantFiltersTheDate) {
  const auto q = parse_query(support::read_file(support::query_dir() / "substitute.rq"));
  EXPECT_EQ(count_unions(q.pattern), 1u);
  EXPECT_EQ(count_filters(q.pattern), 2u);
}

TEST(ParseQuery, Minimal) {
  const auto q = parse_query("SELECT ?s WHERE { ?s ?p ?o }");
  EXPECT_EQ(q.projection, std::vector<std::string>{"s"});
  ASSERT_EQ(q.pattern.elements.size(), 1u);
  const auto& tp = std::get<TriplePattern>(q.pattern.elements[0]);
  EXPECT_EQ(tp.object, PatternTerm(Variable("o")));
}

TEST(ParseQuery, MalformedPattern) {
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p }"), QuerySyntaxError);
  EXPECT_THROW(parse_query("SELECT WHERE { ?s ?p ?o }"), QuerySyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { }"), QuerySyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p ?o"), QuerySyntaxError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?s ?p ?o }"), QuerySyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p ?o FILTER (1 > 2) }"), QuerySyntaxError);
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s ?p ?o } extra"), QuerySyntaxError);
}

TEST(ParseQuery, ErrorPositionsNameLineAndColumn) {
  EXPECT_EQ(error_at("SELECT ?s WHERE {\n  ?s ?p }"), (SourcePosition{2, 9}));
  EXPECT_EQ(error_at("SELECT ?s\nWHERE { ?s ?p ?o ?x }"), (SourcePosition{2, 18}));
}

TEST(ParseQuery, UnknownPrefix) {
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s zz:p ?o }"), UnknownPrefix);
  ParseOptions strict;
  strict.use_fallback_prefixes = false;
  EXPECT_THROW(parse_query("SELECT ?s WHERE { ?s foaf:name ?o }", strict), UnknownPrefix);
  EXPECT_NO_THROW(parse_query("SELECT ?s WHERE { ?s foaf:name ?o }"));
}

TEST(ParseQuery, Abbreviations) {
  const auto q = parse_query(
      "PREFIX ex: <http://ex.org/>\n"
      "SELECT ?s ?o WHERE { ?s a ex:T ; ex:p ?o , \"x\" , 5 , 2.5 . ?o ex:q \"d\"^^ex:dt }");
  ASSERT_EQ(q.pattern.elements.size(), 6u);
  const auto& first = std::get<TriplePattern>(q.pattern.elements[0]);
  EXPECT_EQ(first.predicate, PatternTerm(Term(rdf_type())));
  const auto& third = std::get<TriplePattern>(q.pattern.elements[2]);
  EXPECT_EQ(third.subject, PatternTerm(Variable("s")));
  EXPECT_EQ(third.object, PatternTerm(Term(Literal("x"))));
  EXPECT_EQ(std::get<TriplePattern>(q.pattern.elements[3]).object, PatternTerm(Term(Literal("5", xsd("integer")))));
  EXPECT_EQ(std::get<TriplePattern>(q.pattern.elements[4]).object, PatternTerm(Term(Literal("2.5", xsd("decimal")))));
}

TEST(ParseQuery, BaseAndComments) {
  const auto q = parse_query(
      "# leading\nBASE <http://ex.org/dir/>\nSELECT ?s # trailing\nWHERE { ?s <p> <#frag> }");
  const auto& tp = std::get<TriplePattern>(q.pattern.elements[0]);
  EXPECT_EQ(tp.predicate, PatternTerm(Term(Iri("http://ex.org/dir/p"))));
  EXPECT_EQ(tp.object, PatternTerm(Term(Iri("http://ex.org/dir/#frag"))));
}

TEST(ParseQuery, FilterOperators) {
  const std::vector<std::pair<std::string, CompareOp>> ops{
      {"<", CompareOp::kLess},       {">", CompareOp::kGreater}, {"<=", CompareOp::kLessEqual},
      {">=", CompareOp::kGreaterEqual}, {"=", CompareOp::kEqual},  {"!=", CompareOp::kNotEqual}};
  for (const auto& [text, op] : ops) {
    const auto q = parse_query("SELECT ?s WHERE { ?s ?p ?o FILTER (?o " + text + " 3) }");
    const auto& f = std::get<Filter>(q.pattern.elements[1]);
    EXPECT_EQ(f.expr.op, op) << text;
    EXPECT_EQ(to_string(op), text);
  }
}

TEST(ParseQuery, NestedUnionChain) {
  const auto q = parse_query("SELECT ?s WHERE { { ?s <http://a/p> ?o } UNION { ?s <http://a/q> ?o } UNION { ?s <http://a/r> ?o } }");
  EXPECT_EQ(count_unions(q.pattern), 2u);
  EXPECT_EQ(variables_of(q.pattern), (std::vector<std::string>{"s", "o"}));
}
