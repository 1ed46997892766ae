#include <gtest/gtest.h>

#include <random>

#include "docgraph/collection/ingest.hpp"
#include "docgraph/collection/manifest.hpp"
#include "docgraph/collection/stats.hpp"
#include "docgraph/collection/validate.hpp"
#include "docgraph/rdf/ntriples.hpp"
#include "docgraph/store/ntriples_io.hpp"
#include "docgraph/vocab/registry.hpp"
#include "oracle/minisams_hand.hpp"
#include "support.hpp"

using namespace docgraph;
using namespace docgraph::rdf;
using namespace docgraph::collection;
namespace hand = oracle::minisams;

namespace {

std::string manifest_error(const std::string& text, const std::filesystem::path& dir) {
  try {
    parse_manifest(text, dir);
  } catch (const ManifestError& e) {
    return e.what();
  }
  return "";
}

std::string export_all_graphs(const store::Dataset& ds) {
  std::string out;
  for (const auto& g : ds.graph_names()) out += "# " + g.str() + "\n" + store::export_graph(ds, g);
  return out;
}

// Writes a random collection of small RDFa documents plus non-XML stubs.
std::filesystem::path random_collection(std::mt19937& rng, const support::TempDir& dir) {
  const auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  std::string manifest = "@base <http://example.org/coll/>\n";
  const int docs = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int d = 0; d < docs; ++d) {
    const std::string name = "doc" + std::to_string(d);
    std::string meta;
    if (chance(0.5)) meta += "title=Doc " + std::to_string(d) + ";";
    if (chance(0.5)) meta += "date=2009-0" + std::to_string(1 + d % 9) + "-15;";
    if (chance(0.5)) meta += "responsible=http://example.org/emp#e" + std::to_string(d % 3) + ";";
    if (!meta.empty()) meta.pop_back();
    const std::string format = chance(0.25) ? (chance(0.5) ? "word" : "isabelle") : "xml";
    std::string xml = "<doc xmlns:omdoc=\"http://omdoc.org/ontology#\" xmlns:semVM=\"http://www.sams-projekt.de/ontologies/V-model#\">";
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) {
      const std::string frag = "o" + std::to_string(std::uniform_int_distribution<int>(0, 3)(rng));
      xml += "<div rel=\"omdoc:hasPart\"><div about=\"#" + frag + "\" typeof=\"omdoc:Theory\">";
      if (chance(0.5)) xml += "<span rel=\"semVM:refines\" resource=\"doc" + std::to_string(d / 2) + ".xml#o0\"/>";
      if (chance(0.3)) xml += "<span typeof=\"omdoc:Definition\"/>";
      xml += "</div></div>";
    }
    if (chance(0.1)) xml += "<span property=\"zz:unknown\">w</span>";
    xml += "</doc>";
    support::write_file(dir / (name + ".xml"), xml);
    manifest += name + ".xml\t" + name + ".xml\t" + format + (meta.empty() ? "" : "\t" + meta) + "\n";
  }
  support::write_file(dir / "manifest.tsv", manifest);
  return dir / "manifest.tsv";
}

}  // namespace

TEST(Manifest, ParsesFixture) {
  const auto m = load_manifest(support::fixture_dir() / "manifest.tsv");
  ASSERT_TRUE(m.base);
  EXPECT_EQ(m.base->str(), "http://www.sams-projekt.de/samsdocs/");
  ASSERT_EQ(m.entries.size(), 6u);
  const auto& contract = m.entries[0];
  EXPECT_EQ(contract.document.str(), hand::doc("contract"));
  EXPECT_EQ(contract.format, "xml");
  EXPECT_EQ(contract.title, "Contract Requirements");
  EXPECT_EQ(contract.date, Literal("2008-11-15", xsd("date")));
  EXPECT_EQ(contract.responsible, Iri(hand::employee("Nora")));
  EXPECT_FALSE(contract.creator);
  EXPECT_EQ(contract.line, 4u);
  EXPECT_EQ(m.entries[3].creator, "Carol");
  EXPECT_EQ(m.file_of(m.entries[1]), support::fixture_dir() / "sysspec.xml");
}

TEST(Manifest, Errors) {
  support::TempDir dir;
  support::write_file(dir / "a.xml", "<a/>");
  EXPECT_NE(manifest_error("a.xml\thttp://x.org/a\txml\nb.xml\thttp://x.org/b\txml\n", dir.path()).find("missing file"),
            std::string::npos);
  EXPECT_NE(manifest_error("a.xml\thttp://x.org/a\txml\nb.xml\thttp://x.org/b\txml\n", dir.path()).find("b.xml"),
            std::string::npos);
  EXPECT_NE(manifest_error("a.xml\thttp://x.org/a\txml\na.xml\thttp://x.org/a\tword\n", dir.path()).find("duplicate"),
            std::string::npos);
  EXPECT_NE(manifest_error("a.xml\thttp://x.org/a\txml\tcolour=red\n", dir.path()).find("colour"), std::string::npos);
  EXPECT_NE(manifest_error("a.xml\thttp://x.org/a\txml\tdate=2009-02-30\n", dir.path()).find("xsd:date"),
            std::string::npos);
  EXPECT_NE(manifest_error("a.xml\thttp://x.org/a\txml\n@base <http://x.org/>\n", dir.path()).find("line 2"),
            std::string::npos);
  EXPECT_NE(manifest_error("a.xml\ta\txml\n", dir.path()).find("@base"), std::string::npos);
  EXPECT_NE(manifest_error("a.xml http://x.org/a xml\n", dir.path()).find("line 1"), std::string::npos);
  EXPECT_NE(manifest_error("@base http://x.org/\n", dir.path()).find("@base <iri>"), std::string::npos);
  EXPECT_THROW(load_manifest(dir / "nope.tsv"), ManifestError);
}

TEST(Manifest, CommentsBlankLinesAndCrlf) {
  support::TempDir dir;
  support::write_file(dir / "a.xml", "<a/>");
  const auto m = parse_manifest("# c\r\n@base <http://x.org/>\r\n\r\na.xml\ta\tword\tcreator=Ann\r\n", dir.path());
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].document.str(), "http://x.org/a");
  EXPECT_EQ(m.entries[0].format, "word");
  EXPECT_EQ(m.entries[0].creator, "Ann");
}

TEST(Ingest, EmptyManifest) {
  support::TempDir dir;
  support::write_file(dir / "m.tsv", "@base <http://x.org/>\n");
  const auto r = ingest(dir / "m.tsv");
  EXPECT_TRUE(r.dataset.empty());
  EXPECT_TRUE(stats(r.dataset, load_manifest(dir / "m.tsv")).empty());
}

TEST(Ingest, FixtureEqualsHandListPerGraph) {
  const auto r = ingest(support::fixture_dir() / "manifest.tsv");
  EXPECT_TRUE(r.warnings.empty());
  std::map<std::string, std::set<Triple>> expected;
  for (const auto& t : hand::triples()) {
    expected[t.graph].insert(Triple(support::hand_term(t.s), Iri(t.p), support::hand_term(t.o)));
  }
  std::map<std::string, std::set<Triple>> got;
  for (const auto& g : r.dataset.graph_names()) {
    const auto triples = r.dataset.graph_triples(g);
    got[g.str()] = {triples.begin(), triples.end()};
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(r.dataset.size(), hand::merged().size());
}

TEST(Ingest, NonXmlStubAndMetadata) {
  support::TempDir dir;
  support::write_file(dir / "spec.doc", "binary");
  support::write_file(dir / "m.tsv",
                      "@base <http://x.org/>\nspec.doc\tspec\tword\ttitle=Spec;date=2009-01-02;"
                      "creator=Ann;responsible=http://x.org/emp#ann\n");
  const auto r = ingest(dir / "m.tsv");
  const Iri doc("http://x.org/spec");
  const std::set<Triple> expected{
      Triple(doc, vocab::dc("format"), Literal("word")), Triple(doc, vocab::dc("title"), Literal("Spec")),
      Triple(doc, vocab::dc("date"), Literal("2009-01-02", xsd("date"))),
      Triple(doc, vocab::dc("creator"), Literal("Ann")), Triple(doc, vocab::vm("responsible"), Iri("http://x.org/emp#ann"))};
  const auto all = r.dataset.graph_triples(doc);
  EXPECT_EQ(std::set<Triple>(all.begin(), all.end()), expected);
}

TEST(Ingest, MalformedXmlNamesFileAndPosition) {
  support::TempDir dir;
  support::write_file(dir / "ok.xml", "<a/>");
  support::write_file(dir / "bad.xml", "<a>\n<b></a>");
  support::write_file(dir / "m.tsv", "@base <http://x.org/>\nok.xml\tok\txml\nbad.xml\tbad\txml\n");
  for (const auto execution : {Execution::kSerial, Execution::kParallel}) {
    try {
      ingest(dir / "m.tsv", execution);
      FAIL();
    } catch (const DocumentError& e) {
      EXPECT_NE(std::string(e.what()).find("bad.xml:2:"), std::string::npos) << e.what();
    }
  }
}

TEST(IngestProperty, DeterministicAttributedAndSerialEqualsParallel) {
  std::mt19937 rng(81);
  for (int trial = 0; trial < 60; ++trial) {
    support::TempDir dir;
    const auto manifest_path = random_collection(rng, dir);
    const auto manifest = load_manifest(manifest_path);
    const auto first = ingest(manifest, Execution::kSerial);
    const auto second = ingest(manifest, Execution::kSerial);
    const auto parallel = ingest(manifest, Execution::kParallel);
    EXPECT_EQ(export_all_graphs(first.dataset), export_all_graphs(second.dataset));
    EXPECT_EQ(export_all_graphs(first.dataset), export_all_graphs(parallel.dataset));
    EXPECT_EQ(first.warnings.size(), parallel.warnings.size());

    std::set<Iri> documents;
    for (const auto& e : manifest.entries) documents.insert(e.document);
    for (const auto& t : first.dataset.triples()) {
      const auto sources = first.dataset.sources_of(t);
      ASSERT_EQ(sources.size(), 1u) << serialize_triple(t);
      EXPECT_TRUE(documents.contains(sources[0]));
    }

    std::size_t total_docs = 0, total_triples = 0;
    for (const auto& row : stats(first.dataset, manifest)) {
      total_docs += row.documents;
      total_triples += row.triples;
    }
    EXPECT_EQ(total_docs, manifest.entries.size());
    EXPECT_EQ(total_triples, first.dataset.size());
  }
}

TEST(Ingest, FixtureTriplesHaveExactlyOneSource) {
  const auto& ds = support::minisams();
  for (const auto& t : ds.triples()) EXPECT_EQ(ds.sources_of(t).size(), 1u) << serialize_triple(t);
}

TEST(Validate, FixtureIsClean) {
  const auto report = validate(ingest(support::fixture_dir() / "manifest.tsv"));
  EXPECT_FALSE(report.has_errors());
  EXPECT_TRUE(report.findings.empty());
}

TEST(Validate, ConstructedDefects) {
  const Iri d("http://x.org/d"), o("http://x.org/d#o"), missing("http://x.org/d#missing");
  const Iri emp("http://x.org/emp"), graph("urn:g");
  store::Dataset ds;
  ds.insert(graph, Triple(d, vocab::omdoc("hasPart"), o));
  ds.insert(graph, Triple(d, vocab::vm("responsible"), emp));
  ds.insert(graph, Triple(o, vocab::sem_vm("refines"), missing));
  auto report = validate(ds);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].severity, Severity::kError);
  EXPECT_EQ(report.findings[0].document, Term(d));
  EXPECT_NE(report.findings[0].message.find("dangling"), std::string::npos);

  store::Dataset unowned;
  unowned.insert(graph, Triple(d, vocab::dc("title"), Literal("t")));
  report = validate(unowned);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].severity, Severity::kWarning);
  EXPECT_EQ(report.count(Severity::kWarning), 1u);
  EXPECT_FALSE(report.has_errors());

  store::Dataset bad_date;
  bad_date.insert(graph, Triple(d, vocab::vm("responsible"), emp));
  bad_date.insert(graph, Triple(d, vocab::dc("date"), Literal("2009-02-30", xsd("date"))));
  bad_date.insert(graph, Triple(d, vocab::omdoc("hasPart"), o));
  bad_date.insert(graph, Triple(o, rdf_type(), vocab::omdoc("Symbol")));
  report = validate(bad_date);
  EXPECT_EQ(report.count(Severity::kError), 1u);
  EXPECT_EQ(report.count(Severity::kWarning), 1u);
  for (const auto& f : report.findings) EXPECT_EQ(f.document, Term(d));
}

TEST(Validate, ExtractionWarningsCarryPaths) {
  support::TempDir dir;
  support::write_file(dir / "w.xml", "<a>\n <b property=\"zz:q\">x</b></a>");
  support::write_file(dir / "m.tsv", "@base <http://x.org/>\nw.xml\tw\txml\tresponsible=http://x.org/e\n");
  const auto report = validate(ingest(dir / "m.tsv"));
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].message.rfind("w.xml:2:2: ", 0), 0u) << report.findings[0].message;
}

TEST(ValidateProperty, CleanSurvivesExportImport) {
  const auto& ds = support::minisams();
  ASSERT_TRUE(validate(ds).findings.empty());
  const auto again = store::import_ntriples(store::export_ntriples(ds), Iri("urn:docgraph:dataset"));
  EXPECT_TRUE(validate(again).findings.empty());

  std::mt19937 rng(82);
  for (int trial = 0; trial < 40; ++trial) {
    support::TempDir dir;
    const auto r = ingest(random_collection(rng, dir));
    if (validate(r.dataset).has_errors()) continue;
    const auto reimported = store::import_ntriples(store::export_ntriples(r.dataset), Iri("urn:g"));
    EXPECT_FALSE(validate(reimported).has_errors());
  }
}

TEST(Stats, Fixture) {
  const auto& ds = support::minisams();
  const auto rows = stats(ds, load_manifest(support::fixture_dir() / "manifest.tsv"));
  EXPECT_EQ(rows, (std::vector<FormatStats>{{"xml", 6, hand::triples().size()}}));
}
