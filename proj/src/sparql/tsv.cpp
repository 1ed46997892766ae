#include <algorithm>
#include <ostream>

#include "docgraph/rdf/ntriples.hpp"
#include "docgraph/sparql/evaluate.hpp"

namespace docgraph::sparql {

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, bool pretty) {
  std::vector<std::size_t> widths(header.size(), 0);
  if (pretty) {
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = display_width(header[i]);
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], display_width(row[i]));
      }
    }
  }
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << (pretty ? "  " : "\t");
      out << cells[i];
      if (pretty && i + 1 < cells.size()) {
        out << std::string(widths[i] - display_width(cells[i]), ' ');
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void write_tsv(std::ostream& out, const SolutionSequence& solutions, bool pretty) {
  std::vector<std::string> header;
  for (const auto& v : solutions.variables) header.push_back("?" + v);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(solutions.rows.size());
  for (const auto& b : solutions.rows) {
    std::vector<std::string> cells;
    for (const auto& v : solutions.variables) {
      auto it = b.find(v);
      cells.push_back(it == b.end() ? std::string() : rdf::serialize_term(it->second));
    }
    rows.push_back(std::move(cells));
  }
  write_table(out, header, rows, pretty);
}

}  // namespace docgraph::sparql
