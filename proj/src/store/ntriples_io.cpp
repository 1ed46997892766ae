#include "docgraph/store/ntriples_io.hpp"

#include <algorithm>
#include <vector>

#include "docgraph/rdf/ntriples.hpp"

namespace docgraph::store {

namespace {

std::string render_sorted(const std::vector<rdf::Triple>& triples) {
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const auto& t : triples) lines.push_back(rdf::serialize_triple(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

void skip_blanks(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
}

rdf::Term rescope(rdf::Term t, BlankNodeScope scope, std::string_view tag) {
  if (scope == BlankNodeScope::kSourceGraph) {
    if (const auto* b = std::get_if<rdf::BlankNode>(&t)) {
      return rdf::BlankNode(std::string(tag) + b->label());
    }
  }
  return t;
}

}  // namespace

std::string export_ntriples(const Dataset& ds) { return render_sorted(ds.triples()); }

std::string export_graph(const Dataset& ds, const rdf::Iri& graph) {
  return render_sorted(ds.graph_triples(graph));
}

Dataset import_ntriples(std::string_view text, const rdf::Iri& source) {
  Dataset ds;
  load_ntriples(ds, text, source);
  return ds;
}

void load_ntriples(Dataset& ds, std::string_view text, const rdf::Iri& source,
                   BlankNodeScope scope, std::string_view scope_tag) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t pos = 0;
    skip_blanks(line, pos);
    if (pos == line.size() || line[pos] == '#') continue;
    try {
      rdf::Term s = rdf::parse_term_at(line, pos);
      skip_blanks(line, pos);
      rdf::Term p = rdf::parse_term_at(line, pos);
      skip_blanks(line, pos);
      rdf::Term o = rdf::parse_term_at(line, pos);
      skip_blanks(line, pos);
      if (pos >= line.size() || line[pos] != '.') {
        throw NtParseError(line_no, "expected '.' at end of triple");
      }
      ++pos;
      skip_blanks(line, pos);
      if (pos < line.size() && line[pos] != '#') {
        throw NtParseError(line_no, "unexpected text after '.'");
      }
      if (rdf::is_literal(s)) throw NtParseError(line_no, "literal in subject position");
      const auto* pred = std::get_if<rdf::Iri>(&p);
      if (pred == nullptr) throw NtParseError(line_no, "predicate must be an IRI");
      ds.insert(source, rdf::Triple(rescope(std::move(s), scope, scope_tag), *pred,
                                    rescope(std::move(o), scope, scope_tag)));
    } catch (const rdf::TermSyntaxError& e) {
      throw NtParseError(line_no, "column " + std::to_string(e.offset() + 1) + ": " + e.what());
    } catch (const InvalidTerm& e) {
      throw NtParseError(line_no, e.what());
    }
  }
}

}  // namespace docgraph::store
