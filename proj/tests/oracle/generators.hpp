#pragma once

#include <random>
#include <string>
#include <vector>

#include "docgraph/rdf/term.hpp"
#include "docgraph/sparql/query.hpp"
#include "docgraph/store/dataset.hpp"

namespace oracle {

using Rng = std::mt19937_64;

docgraph::store::Dataset to_dataset(const std::vector<docgraph::rdf::Triple>& triples,
                                    const std::string& graph = "http://example.org/graph");

// Up to `max_triples` triples over a small pool of IRIs, blank nodes and
// date / integer / decimal / string literals, so that joins and filters hit.
std::vector<docgraph::rdf::Triple> random_query_dataset(Rng& rng, std::size_t max_triples = 50);

// Up to four triple patterns over ?a ?b ?c ?d and the same term pool, at
// most one UNION and at most one FILTER (top level or inside a branch).
// About half of the patterns are copied from `anchors` with some positions
// replaced by variables, so that they have matches.
docgraph::sparql::SelectQuery random_query(Rng& rng, const std::vector<docgraph::rdf::Triple>& anchors = {});

// Objects linked by refines / occursInDefinitionOf edges (cycles and self
// loops included), documents with hasPart links, and unrelated noise edges.
struct DependencyGraph {
  std::vector<docgraph::rdf::Triple> triples;
  std::vector<docgraph::rdf::Iri> objects;
};
DependencyGraph random_dependency_graph(Rng& rng, std::size_t max_edges = 100);

// A small collection: documents with parts, dates (one malformed now and
// then), responsible persons with names, and dependency edges.
struct RandomCollection {
  std::vector<docgraph::rdf::Triple> triples;
  std::vector<docgraph::rdf::Iri> employees;
};
RandomCollection random_collection(Rng& rng);

// Terms exercising serialization: escapes, non-ASCII text, blank nodes,
// assorted datatypes.
std::vector<docgraph::rdf::Triple> random_rich_triples(Rng& rng, std::size_t max_triples = 60);

}  // namespace oracle
