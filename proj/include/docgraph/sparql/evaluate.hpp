#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "docgraph/execution.hpp"
#include "docgraph/sparql/query.hpp"
#include "docgraph/store/dataset.hpp"

namespace docgraph::sparql {

// Bag of solutions restricted to the projection. Unbound projected
// variables are absent from a row's binding.
struct SolutionSequence {
  std::vector<std::string> variables;
  std::vector<Binding> rows;
};

// Left-to-right nested-loop evaluation with bag semantics.
//
// Triple patterns join against the accumulated solutions; a UNION evaluates
// both branches against the accumulated solutions and concatenates; a FILTER
// applies as soon as every variable it mentions is bound on all paths through
// the preceding elements, otherwise at the end of its group. Comparisons that
// are Incomparable, or that mention an unbound variable, are not true.
//
// kParallel runs the join step with OpenMP; the result, including row
// order, is identical to kSerial.
SolutionSequence evaluate(const SelectQuery& query, const store::Dataset& ds,
                          Execution execution = Execution::kSerial);

bool eval_filter(const FilterExpr& expr, const Binding& binding);

// Header row of `?name` columns, one row per solution, terms in N-Triples
// syntax, absent bindings as empty cells. `pretty` pads columns with spaces.
void write_tsv(std::ostream& out, const SolutionSequence& solutions, bool pretty = false);

// Generic table writer used by the CLI for service output.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, bool pretty = false);

}  // namespace docgraph::sparql
