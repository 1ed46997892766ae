#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "docgraph/collection/ingest.hpp"
#include "docgraph/collection/manifest.hpp"
#include "docgraph/collection/stats.hpp"
#include "docgraph/collection/validate.hpp"
#include "docgraph/error.hpp"
#include "docgraph/rdf/ntriples.hpp"
#include "docgraph/services/certification.hpp"
#include "docgraph/services/services.hpp"
#include "docgraph/sparql/evaluate.hpp"
#include "docgraph/sparql/parser.hpp"
#include "docgraph/store/ntriples_io.hpp"
#include "docgraph/vocab/registry.hpp"

namespace docgraph::cli {

namespace {

// Raised for semantically invalid flag values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out.flush()) throw Error("cannot write " + path);
}

store::Dataset load_dataset(const std::string& path) {
  return store::import_ntriples(read_file(path), rdf::Iri("urn:docgraph:dataset"));
}

rdf::Iri to_iri(const std::string& text, const char* what) {
  if (!rdf::Iri::is_valid(text)) throw Error(std::string(what) + " '" + text + "' is not an absolute IRI");
  return rdf::Iri(text);
}

rdf::Literal to_date(const std::string& text, const char* what) {
  if (!rdf::is_valid_xsd_date(text)) throw Error(std::string(what) + " '" + text + "' is not an xsd:date");
  return rdf::Literal(text, rdf::xsd("date"));
}

std::string cell(const rdf::Term& t) { return rdf::serialize_term(t); }

using Rows = std::vector<std::vector<std::string>>;

struct Options {
  bool pretty = false;
  std::string dataset;
  std::string manifest;
  std::vector<std::string> inputs;
  std::string query;
  std::string out;
  std::string graph;
  std::string employee;
  std::string cutoff;
  std::string object;
  std::string since;
  std::string symbol;
  std::string state_file;
  std::string action;
  std::string subject;
  std::string target;
  std::vector<std::string> keep;
  bool serial = false;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const std::string& text) {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      write_file(o_.out, text);
    }
  }

  void table(const std::vector<std::string>& header, const Rows& rows) {
    sparql::write_table(out_, header, rows, o_.pretty);
  }

  Execution execution() const { return o_.serial ? Execution::kSerial : Execution::kParallel; }

  int ingest() {
    auto result = collection::ingest(std::filesystem::path(o_.manifest), execution());
    for (const auto& w : result.warnings) {
      err_ << "warning: " << w.path.string() << ":" << to_string(w.warning.position) << ": "
           << w.warning.message << "\n";
    }
    if (o_.graph.empty()) {
      emit(store::export_ntriples(result.dataset));
    } else {
      const auto graph = to_iri(o_.graph, "graph");
      const auto names = result.dataset.graph_names();
      if (std::find(names.begin(), names.end(), graph) == names.end()) {
        throw Error("no document " + graph.str() + " in the manifest");
      }
      emit(store::export_graph(result.dataset, graph));
    }
    return 0;
  }

  int export_inputs() {
    store::Dataset ds;
    const bool scoped = o_.inputs.size() > 1;
    for (std::size_t i = 0; i < o_.inputs.size(); ++i) {
      const std::string tag = "g" + std::to_string(i);
      store::load_ntriples(ds, read_file(o_.inputs[i]), rdf::Iri("urn:docgraph:input:" + std::to_string(i)),
                           scoped ? store::BlankNodeScope::kSourceGraph : store::BlankNodeScope::kPreserve,
                           tag);
    }
    emit(store::export_ntriples(ds));
    return 0;
  }

  int query() {
    const auto ds = load_dataset(o_.dataset);
    const auto q = sparql::parse_query(read_file(o_.query));
    sparql::write_tsv(out_, sparql::evaluate(q, ds), o_.pretty);
    return 0;
  }

  int substitute() {
    const auto ds = load_dataset(o_.dataset);
    Rows rows;
    for (const auto& s : services::find_substitute(ds, to_iri(o_.employee, "employee"),
                                                   to_date(o_.cutoff, "cutoff"))) {
      rows.push_back({cell(s.person), s.name});
    }
    table({"person", "name"}, rows);
    return 0;
  }

  int impact() {
    const auto ds = load_dataset(o_.dataset);
    const auto report = services::impact_set(ds, to_iri(o_.object, "object"));
    Rows rows;
    for (const auto& t : report.objects) rows.push_back({"object", cell(t)});
    for (const auto& t : report.documents) rows.push_back({"document", cell(t)});
    table({"kind", "term"}, rows);
    return 0;
  }

  int recert() {
    const auto ds = load_dataset(o_.dataset);
    Rows rows;
    for (const auto& t : services::recertification_set(ds, to_date(o_.since, "since"))) {
      rows.push_back({cell(t)});
    }
    table({"document"}, rows);
    return 0;
  }

  int coverage() {
    const auto c = services::verification_coverage(load_dataset(o_.dataset));
    table({"total", "verified", "unverified"},
          {{std::to_string(c.total), std::to_string(c.verified), std::to_string(c.unverified)}});
    return 0;
  }

  int whois() {
    const auto ds = load_dataset(o_.dataset);
    Rows rows;
    for (const auto& c : services::whois(ds, to_iri(o_.object, "object"))) {
      rows.push_back({c.role, cell(c.person), c.name});
    }
    table({"role", "person", "name"}, rows);
    return 0;
  }

  int lookup_definition() {
    const auto ds = load_dataset(o_.dataset);
    Rows rows;
    for (const auto& t : services::definition_lookup(ds, to_iri(o_.symbol, "symbol"))) {
      rows.push_back({cell(t)});
    }
    table({"definition"}, rows);
    return 0;
  }

  int state() {
    services::CertificationState state;
    if (std::filesystem::exists(o_.state_file)) state = services::read_state(read_file(o_.state_file));
    const rdf::Iri subject = to_iri(o_.subject, "subject");
    if (o_.action == "get") {
      out_ << services::to_string(state.get(subject)) << "\n";
      return 0;
    }
    if (o_.action == "approve") {
      state = services::approve(std::move(state), subject);
    } else {
      if (o_.dataset.empty()) throw UsageError("state reject requires --dataset");
      state = services::reject(load_dataset(o_.dataset), std::move(state), subject);
    }
    write_file(o_.state_file, services::write_state(state));
    return 0;
  }

  int validate() {
    const std::filesystem::path target(o_.target);
    const auto report = target.extension() == ".nt"
                            ? collection::validate(load_dataset(o_.target))
                            : collection::validate(collection::ingest(target, execution()));
    Rows rows;
    for (const auto& f : report.findings) {
      rows.push_back({std::string(collection::to_string(f.severity)), cell(f.document), f.message});
    }
    table({"severity", "document", "message"}, rows);
    return report.has_errors() ? 1 : 0;
  }

  int stats() {
    const auto manifest = collection::load_manifest(o_.manifest);
    const auto ds = collection::ingest(manifest, execution()).dataset;
    Rows rows;
    for (const auto& s : collection::stats(ds, manifest)) {
      rows.push_back({s.format, std::to_string(s.documents), std::to_string(s.triples)});
    }
    table({"format", "documents", "triples"}, rows);
    return 0;
  }

  int dimensions() {
    std::set<vocab::Dimension> keep;
    for (const auto& name : o_.keep) {
      const auto d = vocab::parse_dimension(name);
      if (!d) throw UsageError("unknown dimension '" + name + "'");
      keep.insert(*d);
    }
    emit(store::export_ntriples(vocab::filter_by_dimensions(load_dataset(o_.dataset), keep)));
    return 0;
  }

  int vocab_dump() {
    Rows rows;
    const auto& registry = vocab::builtin_registry();
    for (const auto& ns : registry.namespaces()) {
      rows.push_back({ns.prefix + ":*", std::string(vocab::to_string(ns.dimension))});
    }
    for (const auto& t : registry.terms()) {
      rows.push_back({t.curie, std::string(vocab::to_string(t.dimension))});
    }
    table({"term", "dimension"}, rows);
    return 0;
  }

  Options o_;

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  Options& o = r.o_;
  std::function<int()> action;

  CLI::App app{"Extract, store and query RDFa metadata of document collections", "docgraph"};
  app.require_subcommand(1);

  const auto add = [&](const char* name, const char* description, int (Runner::*fn)()) {
    auto* sub = app.add_subcommand(name, description);
    sub->callback([&action, &r, fn] { action = [&r, fn] { return (r.*fn)(); }; });
    return sub;
  };
  const auto pretty = [&](CLI::App* sub) { sub->add_flag("--pretty", o.pretty, "Align columns"); };

  auto* ingest = add("ingest", "Ingest a manifest and print canonical N-Triples", &Runner::ingest);
  ingest->add_option("manifest", o.manifest, "Manifest file")->required();
  ingest->add_option("--out", o.out, "Write to this file instead of stdout");
  ingest->add_option("--graph", o.graph, "Export only this document's named graph");
  ingest->add_flag("--serial", o.serial, "Extract documents on one thread");

  auto* exp = add("export", "Merge N-Triples files into canonical N-Triples", &Runner::export_inputs);
  exp->add_option("inputs", o.inputs, "N-Triples files")->required();
  exp->add_option("--out", o.out, "Write to this file instead of stdout");

  auto* query = add("query", "Evaluate a SPARQL query file", &Runner::query);
  query->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  query->add_option("query", o.query, "Query file")->required();
  pretty(query);

  auto* substitute = add("substitute", "Find substitutes for an employee", &Runner::substitute);
  substitute->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  substitute->add_option("--employee", o.employee, "Employee IRI")->required();
  substitute->add_option("--cutoff", o.cutoff, "Only consider documents dated after this xsd:date")->required();
  pretty(substitute);

  auto* impact = add("impact", "Objects and documents affected by a change", &Runner::impact);
  impact->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  impact->add_option("--object", o.object, "Changed object IRI")->required();
  pretty(impact);

  auto* recert = add("recert", "Documents to re-certify after changes", &Runner::recert);
  recert->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  recert->add_option("--since", o.since, "xsd:date of the last certification")->required();
  pretty(recert);

  auto* coverage = add("coverage", "Verified and unverified assertions", &Runner::coverage);
  coverage->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  pretty(coverage);

  auto* whois = add("whois", "Persons responsible for an object", &Runner::whois);
  whois->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  whois->add_option("--object", o.object, "Object IRI")->required();
  pretty(whois);

  auto* lookup = add("lookup-definition", "Definitions of a symbol", &Runner::lookup_definition);
  lookup->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  lookup->add_option("--symbol", o.symbol, "Symbol IRI")->required();
  pretty(lookup);

  auto* state = add("state", "Read or update certification state", &Runner::state);
  state->add_option("state_file", o.state_file, "State file")->required();
  state->add_option("action", o.action, "get, approve or reject")
      ->required()
      ->check(CLI::IsMember({"get", "approve", "reject"}));
  state->add_option("subject", o.subject, "Subject IRI")->required();
  state->add_option("--dataset", o.dataset, "N-Triples dataset, required for reject");

  auto* validate = add("validate", "Check link integrity of a dataset or manifest", &Runner::validate);
  validate->add_option("target", o.target, "N-Triples dataset (.nt) or manifest")->required();
  pretty(validate);

  auto* stats = add("stats", "Documents and triples per format", &Runner::stats);
  stats->add_option("manifest", o.manifest, "Manifest file")->required();
  pretty(stats);

  auto* dims = add("dimensions", "Keep only triples of the given dimensions", &Runner::dimensions);
  dims->add_option("dataset", o.dataset, "N-Triples dataset")->required();
  dims->add_option("--keep", o.keep, "Comma-separated dimension names")->required()->delimiter(',');
  dims->add_option("--out", o.out, "Write to this file instead of stdout");

  auto* dump = add("vocab-dump", "Print the builtin vocabulary", &Runner::vocab_dump);
  pretty(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
    app.exit(e, help ? out : err, err);
    return help ? 0 : 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace docgraph::cli
