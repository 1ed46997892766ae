#pragma once

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "docgraph/store/dataset.hpp"

namespace docgraph::sparql::detail {

using store::TermId;

inline constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

// Solution row indexed by variable slot.
using Row = std::vector<TermId>;

struct PatternSlot {
  int variable = -1;              // slot index when the position is a variable
  std::optional<TermId> constant; // dictionary id of a ground term
};

struct CompiledPattern {
  std::array<PatternSlot, 3> slots;
  bool satisfiable = true;  // false when a ground term is absent from the dataset
};

// Extends every row with each compatible match of `pattern`. Output keeps
// row order, and for each row the index order of its matches.
std::vector<Row> join_serial(const store::Dataset& ds, const std::vector<Row>& rows,
                             const CompiledPattern& pattern);

// OpenMP version of join_serial with identical output.
std::vector<Row> join_parallel(const store::Dataset& ds, const std::vector<Row>& rows,
                               const CompiledPattern& pattern);

}  // namespace docgraph::sparql::detail
