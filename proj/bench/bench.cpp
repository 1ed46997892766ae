// Serial reference vs OpenMP kernels: nested-loop join and collection ingest.
#include <benchmark/benchmark.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "docgraph/collection/ingest.hpp"
#include "docgraph/sparql/evaluate.hpp"
#include "docgraph/sparql/parser.hpp"
#include "docgraph/store/ntriples_io.hpp"

using namespace docgraph;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::kSerial : Execution::kParallel;
}

store::Dataset random_graph(std::size_t nodes, std::size_t edges) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  store::Dataset ds;
  const rdf::Iri graph("urn:bench");
  const rdf::Iri p("http://example.org/p");
  for (std::size_t i = 0; i < edges; ++i) {
    ds.insert(graph, rdf::Triple(rdf::Iri("http://example.org/n" + std::to_string(node(rng))), p,
                                 rdf::Iri("http://example.org/n" + std::to_string(node(rng)))));
  }
  return ds;
}

void BM_Join(benchmark::State& state) {
  const auto edges = static_cast<std::size_t>(state.range(0));
  const auto ds = random_graph(edges / 4, edges);
  const auto q = sparql::parse_query(
      "SELECT ?a ?d WHERE { ?a <http://example.org/p> ?b . ?b <http://example.org/p> ?c . "
      "?c <http://example.org/p> ?d }");
  if (evaluate(q, ds, Execution::kSerial).rows != evaluate(q, ds, Execution::kParallel).rows) {
    state.SkipWithError("serial and parallel joins disagree");
    return;
  }
  std::size_t rows = 0;
  for (auto _ : state) {
    rows = evaluate(q, ds, mode(state)).rows.size();
    benchmark::DoNotOptimize(rows);
  }
  state.counters["rows"] = static_cast<double>(rows);
}

std::filesystem::path write_collection(std::size_t documents, std::size_t objects) {
  const auto dir = std::filesystem::temp_directory_path() / ("docgraph-bench-" + std::to_string(documents));
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.tsv");
  manifest << "@base <http://example.org/bench/>\n";
  for (std::size_t d = 0; d < documents; ++d) {
    const std::string name = "doc" + std::to_string(d) + ".xml";
    std::ofstream xml(dir / name);
    xml << "<doc xmlns:omdoc=\"http://omdoc.org/ontology#\" "
           "xmlns:semVM=\"http://www.sams-projekt.de/ontologies/V-model#\" "
           "xmlns:dc=\"http://purl.org/dc/elements/1.1/\">\n";
    for (std::size_t o = 0; o < objects; ++o) {
      xml << "<div rel=\"omdoc:hasPart\"><div about=\"#o" << o << "\" typeof=\"omdoc:Definition\">"
          << "<span property=\"dc:title\">Object " << o << " of document " << d << "</span>"
          << "<span rel=\"semVM:refines\" resource=\"doc" << (d + 1) % documents << ".xml#o" << o << "\"/>"
          << "</div></div>\n";
    }
    xml << "</doc>\n";
    manifest << name << '\t' << name << "\txml\tdate=2009-06-01\n";
  }
  return dir / "manifest.tsv";
}

void BM_Ingest(benchmark::State& state) {
  const auto manifest = collection::load_manifest(write_collection(static_cast<std::size_t>(state.range(0)), 200));
  if (store::export_ntriples(collection::ingest(manifest, Execution::kSerial).dataset) !=
      store::export_ntriples(collection::ingest(manifest, Execution::kParallel).dataset)) {
    state.SkipWithError("serial and parallel ingest disagree");
    return;
  }
  std::size_t triples = 0;
  for (auto _ : state) {
    triples = collection::ingest(manifest, mode(state)).dataset.size();
    benchmark::DoNotOptimize(triples);
  }
  state.counters["triples"] = static_cast<double>(triples);
  std::filesystem::remove_all(manifest.directory);
}

}  // namespace

BENCHMARK(BM_Join)->ArgsProduct({{4000, 16000}, {0, 1}})->ArgNames({"edges", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ingest)->ArgsProduct({{16, 64}, {0, 1}})->ArgNames({"documents", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
