#include "join.hpp"

#include <cstddef>

namespace docgraph::sparql::detail {

namespace {

void extend_row(const store::Dataset& ds, const Row& row, const CompiledPattern& pattern,
                std::vector<Row>& out) {
  std::array<std::optional<TermId>, 3> ground;
  for (int i = 0; i < 3; ++i) {
    const PatternSlot& slot = pattern.slots[i];
    if (slot.variable < 0) {
      ground[i] = slot.constant;
    } else if (row[slot.variable] != kUnbound) {
      ground[i] = row[slot.variable];
    }
  }
  ds.scan(ground, [&](const store::IdTriple& t) {
    Row next = row;
    for (int i = 0; i < 3; ++i) {
      const int v = pattern.slots[i].variable;
      if (v < 0) continue;
      if (next[v] == kUnbound) {
        next[v] = t[i];
      } else if (next[v] != t[i]) {
        return;  // same variable twice in the pattern, different values
      }
    }
    out.push_back(std::move(next));
  });
}

}  // namespace

std::vector<Row> join_serial(const store::Dataset& ds, const std::vector<Row>& rows,
                             const CompiledPattern& pattern) {
  std::vector<Row> out;
  if (!pattern.satisfiable) return out;
  for (const Row& row : rows) extend_row(ds, row, pattern, out);
  return out;
}

std::vector<Row> join_parallel(const store::Dataset& ds, const std::vector<Row>& rows,
                               const CompiledPattern& pattern) {
  if (!pattern.satisfiable) return {};
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
  std::vector<std::vector<Row>> partial(rows.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    extend_row(ds, rows[static_cast<std::size_t>(i)], pattern, partial[static_cast<std::size_t>(i)]);
  }
  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  std::vector<Row> out;
  out.reserve(total);
  for (auto& p : partial) {
    for (auto& r : p) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace docgraph::sparql::detail
