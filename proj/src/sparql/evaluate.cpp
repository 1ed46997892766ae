#include "docgraph/sparql/evaluate.hpp"

#include <algorithm>
#include <map>

#include "docgraph/rdf/compare.hpp"
#include "join.hpp"

namespace docgraph::sparql {

using detail::CompiledPattern;
using detail::kUnbound;
using detail::Row;

namespace {

bool apply(CompareOp op, const rdf::Term* a, const rdf::Term* b) {
  if (a == nullptr || b == nullptr) return false;
  switch (op) {
    case CompareOp::kEqual: return *a == *b;
    case CompareOp::kNotEqual: return *a != *b;
    default: break;
  }
  const rdf::Ordering o = rdf::compare_terms(*a, *b);
  if (o == rdf::Ordering::kIncomparable) return false;
  switch (op) {
    case CompareOp::kLess: return o == rdf::Ordering::kLess;
    case CompareOp::kGreater: return o == rdf::Ordering::kGreater;
    case CompareOp::kLessEqual: return o != rdf::Ordering::kGreater;
    case CompareOp::kGreaterEqual: return o != rdf::Ordering::kLess;
    default: return false;
  }
}

class Evaluator {
 public:
  Evaluator(const SelectQuery& q, const store::Dataset& ds, Execution execution)
      : query_(q), ds_(ds), execution_(execution) {
    for (const auto& name : variables_of(q.pattern)) slot_of(name);
  }

  SolutionSequence run() {
    std::vector<bool> certain(slots_.size(), false);
    std::vector<Row> rows{Row(slots_.size(), kUnbound)};
    rows = group(query_.pattern, std::move(rows), certain);

    SolutionSequence out;
    out.variables = query_.projection;
    out.rows.reserve(rows.size());
    for (const Row& row : rows) {
      Binding b;
      for (const auto& name : query_.projection) {
        const TermId id = row[static_cast<std::size_t>(slot_of(name))];
        if (id != kUnbound) b.emplace(name, ds_.dictionary().term(id));
      }
      out.rows.push_back(std::move(b));
    }
    return out;
  }

 private:
  using TermId = store::TermId;

  int slot_of(const std::string& name) {
    auto [it, inserted] = slots_.try_emplace(name, static_cast<int>(slots_.size()));
    return it->second;
  }

  int slot_of(const std::string& name) const { return slots_.at(name); }

  CompiledPattern compile(const TriplePattern& tp) const {
    CompiledPattern c;
    const std::array<const PatternTerm*, 3> pos{&tp.subject, &tp.predicate, &tp.object};
    for (int i = 0; i < 3; ++i) {
      if (const auto* v = std::get_if<Variable>(pos[i])) {
        c.slots[i].variable = slot_of(v->name());
      } else {
        c.slots[i].constant = ds_.dictionary().find(std::get<rdf::Term>(*pos[i]));
        if (!c.slots[i].constant) c.satisfiable = false;
      }
    }
    return c;
  }

  std::vector<int> filter_slots(const FilterExpr& f) const {
    std::vector<int> out;
    for (const auto* side : {&f.lhs, &f.rhs}) {
      if (const auto* v = std::get_if<Variable>(side)) out.push_back(slot_of(v->name()));
    }
    return out;
  }

  const rdf::Term* operand(const PatternTerm& t, const Row& row) const {
    if (const auto* v = std::get_if<Variable>(&t)) {
      const TermId id = row[static_cast<std::size_t>(slot_of(v->name()))];
      return id == kUnbound ? nullptr : &ds_.dictionary().term(id);
    }
    return &std::get<rdf::Term>(t);
  }

  std::vector<Row> apply_filter(const FilterExpr& f, std::vector<Row> rows) const {
    std::erase_if(rows, [&](const Row& row) {
      return !apply(f.op, operand(f.lhs, row), operand(f.rhs, row));
    });
    return rows;
  }

  static bool all_certain(const std::vector<int>& vars, const std::vector<bool>& certain) {
    return std::all_of(vars.begin(), vars.end(),
                       [&](int v) { return certain[static_cast<std::size_t>(v)]; });
  }

  std::vector<Row> group(const GroupPattern& g, std::vector<Row> rows, std::vector<bool>& certain) {
    std::vector<const FilterExpr*> deferred;
    const auto flush_ready = [&] {
      for (auto it = deferred.begin(); it != deferred.end();) {
        if (all_certain(filter_slots(**it), certain)) {
          rows = apply_filter(**it, std::move(rows));
          it = deferred.erase(it);
        } else {
          ++it;
        }
      }
    };

    for (const auto& element : g.elements) {
      if (const auto* tp = std::get_if<TriplePattern>(&element)) {
        const CompiledPattern c = compile(*tp);
        rows = execution_ == Execution::kParallel ? detail::join_parallel(ds_, rows, c)
                                                  : detail::join_serial(ds_, rows, c);
        for (const auto& slot : c.slots) {
          if (slot.variable >= 0) certain[static_cast<std::size_t>(slot.variable)] = true;
        }
      } else if (const auto* u = std::get_if<Union>(&element)) {
        std::vector<bool> left_certain = certain;
        std::vector<bool> right_certain = certain;
        std::vector<Row> left = group(*u->left, rows, left_certain);
        std::vector<Row> right = group(*u->right, std::move(rows), right_certain);
        rows = std::move(left);
        rows.insert(rows.end(), std::make_move_iterator(right.begin()),
                    std::make_move_iterator(right.end()));
        for (std::size_t i = 0; i < certain.size(); ++i) {
          certain[i] = left_certain[i] && right_certain[i];
        }
      } else {
        deferred.push_back(&std::get<Filter>(element).expr);
      }
      flush_ready();
    }
    for (const FilterExpr* f : deferred) rows = apply_filter(*f, std::move(rows));
    return rows;
  }

  const SelectQuery& query_;
  const store::Dataset& ds_;
  Execution execution_;
  std::map<std::string, int> slots_;
};

}  // namespace

SolutionSequence evaluate(const SelectQuery& query, const store::Dataset& ds, Execution execution) {
  return Evaluator(query, ds, execution).run();
}

bool eval_filter(const FilterExpr& expr, const Binding& binding) {
  const auto resolve = [&](const PatternTerm& t) -> const rdf::Term* {
    if (const auto* v = std::get_if<Variable>(&t)) {
      auto it = binding.find(v->name());
      return it == binding.end() ? nullptr : &it->second;
    }
    return &std::get<rdf::Term>(t);
  };
  return apply(expr.op, resolve(expr.lhs), resolve(expr.rhs));
}

}  // namespace docgraph::sparql
