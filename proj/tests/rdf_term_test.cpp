#include <gtest/gtest.h>

#include <map>
#include <unordered_set>

#include "docgraph/rdf/prefix.hpp"
#include "docgraph/rdf/term.hpp"

using namespace docgraph;
using namespace docgraph::rdf;

TEST(Iri, AcceptsSchemeAndRejectsWhitespace) {
  EXPECT_TRUE(Iri::is_valid("http://a/b"));
  EXPECT_TRUE(Iri::is_valid("urn:isbn:0451450523"));
  EXPECT_TRUE(Iri::is_valid("http://example.org/é"));
  EXPECT_FALSE(Iri::is_valid("relative/path"));
  EXPECT_FALSE(Iri::is_valid("http://a b"));
  EXPECT_FALSE(Iri::is_valid("http://a/<b>"));
  EXPECT_FALSE(Iri::is_valid("1http://a"));
  EXPECT_FALSE(Iri::is_valid(""));
  EXPECT_THROW(Iri("no scheme"), InvalidTerm);
}

TEST(BlankNode, LabelSyntax) {
  EXPECT_NO_THROW(BlankNode("b0"));
  EXPECT_THROW(BlankNode("0b"), InvalidTerm);
  EXPECT_THROW(BlankNode(""), InvalidTerm);
  EXPECT_THROW(BlankNode("a-b"), InvalidTerm);
}

TEST(Literal, DefaultsToXsdString) {
  const Literal l("Pierre");
  EXPECT_EQ(l.datatype, xsd("string"));
  EXPECT_TRUE(l.is_well_formed());
  EXPECT_FALSE(Literal("2009-02-29", xsd("date")).is_well_formed());
  EXPECT_TRUE(Literal("2008-02-29", xsd("date")).is_well_formed());
}

TEST(Triple, RejectsLiteralSubject) {
  EXPECT_THROW(Triple(Literal("x"), Iri("http://a/p"), Iri("http://a/o")), InvalidTerm);
  EXPECT_NO_THROW(Triple(BlankNode("b"), Iri("http://a/p"), Literal("x")));
}

TEST(XsdDate, CalendarRules) {
  EXPECT_TRUE(is_valid_xsd_date("2009-06-01"));
  EXPECT_TRUE(is_valid_xsd_date("2000-02-29"));
  EXPECT_FALSE(is_valid_xsd_date("1900-02-29"));
  EXPECT_FALSE(is_valid_xsd_date("2009-13-01"));
  EXPECT_FALSE(is_valid_xsd_date("2009-6-01"));
  EXPECT_FALSE(is_valid_xsd_date("2009-06-31"));
  EXPECT_FALSE(is_valid_xsd_date("2009-06-01Z "));
}

TEST(Term, HashAgreesWithEquality) {
  std::unordered_set<Term> set{Term(Iri("http://a/x")), Term(Literal("x")), Term(BlankNode("x")),
                               Term(Literal("x", xsd("date")))};
  EXPECT_EQ(set.size(), 4u);
  EXPECT_TRUE(set.contains(Term(Literal("x"))));
}

namespace {

PrefixMap query_prefixes() {
  PrefixMap m;
  m.set("vm", "http://www.sams-projekt.de/ontologies/VersionManagement#");
  m.set("omdoc", "http://omdoc.org/ontology#");
  m.set("semVM", "http://www.sams-projekt.de/ontologies/V-model#");
  m.set("dc", "http://purl.org/dc/elements/1.1/");
  m.set("xsd", "http://www.w3.org/2001/XMLSchema#");
  return m;
}

}  // namespace

TEST(Curie, ExpandsQueryPrefixes) {
  const auto m = query_prefixes();
  EXPECT_EQ(expand_curie("vm:responsible", m).str(),
            "http://www.sams-projekt.de/ontologies/VersionManagement#responsible");
  EXPECT_EQ(expand_curie("xsd:date", m).str(), "http://www.w3.org/2001/XMLSchema#date");
}

TEST(Curie, UnknownPrefixAndMalformed) {
  try {
    expand_curie("zzz:x", PrefixMap{});
    FAIL();
  } catch (const UnknownPrefix& e) {
    EXPECT_EQ(e.prefix(), "zzz");
  }
  EXPECT_THROW(expand_curie("nocolon", query_prefixes()), InvalidTerm);
  EXPECT_THROW(PrefixMap{}.set("p", "not an iri"), InvalidTerm);
}

TEST(Curie, SplitAtFirstColon) {
  const auto parts = split_curie("a:b:c");
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->first, "a");
  EXPECT_EQ(parts->second, "b:c");
  EXPECT_FALSE(split_curie("abc"));
}

TEST(Curie, InjectiveForPrefixFreeNamespaces) {
  const auto m = query_prefixes();
  const std::vector<std::string> locals{"", "a", "ab", "b", "responsible", "date", "x1"};
  std::map<std::string, std::string> seen;
  for (const auto& [prefix, ns] : m.entries()) {
    for (const auto& local : locals) {
      const std::string curie = prefix + ":" + local;
      const auto [it, inserted] = seen.emplace(expand_curie(curie, m).str(), curie);
      EXPECT_TRUE(inserted) << curie << " collides with " << it->second;
    }
  }
}
