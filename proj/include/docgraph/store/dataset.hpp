#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "docgraph/rdf/term.hpp"
#include "docgraph/store/pattern.hpp"

namespace docgraph::store {

using TermId = std::uint32_t;
using IdTriple = std::array<TermId, 3>;

// Interns terms to dense ids in first-seen order.
class TermDictionary {
 public:
  TermId intern(const rdf::Term& t);
  std::optional<TermId> find(const rdf::Term& t) const;
  const rdf::Term& term(TermId id) const { return terms_[id]; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<rdf::Term> terms_;
  std::unordered_map<rdf::Term, TermId> ids_;
};

enum class IndexOrder { kSpo, kPos, kOsp };

// Per-document named graphs plus a merged view held in three sorted
// permutation indexes (SPO, POS, OSP).
class Dataset {
 public:
  // Returns true when the triple was new to the named graph of `source`.
  bool insert(const rdf::Iri& source, const rdf::Triple& t);

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }
  std::size_t index_size(IndexOrder order) const;

  std::vector<rdf::Iri> graph_names() const;
  std::size_t graph_size(const rdf::Iri& graph) const;
  std::vector<rdf::Triple> graph_triples(const rdf::Iri& graph) const;
  // Named graphs containing the triple.
  std::vector<rdf::Iri> sources_of(const rdf::Triple& t) const;

  // Merged view in SPO id order.
  std::vector<rdf::Triple> triples() const;
  bool contains(const rdf::Triple& t) const;

  // One binding per merged-view triple unifying with `p`.
  std::vector<Binding> match(const TriplePattern& p) const;

  // Id-level access used by the query engine. `ground[i]` fixes position i
  // (subject, predicate, object); the callback sees every matching triple in
  // index order. The index is chosen from the ground positions.
  template <typename F>
  void scan(const std::array<std::optional<TermId>, 3>& ground, F&& callback) const;

  const TermDictionary& dictionary() const { return dict_; }

  // Convenience lookups over the merged view.
  std::vector<rdf::Term> objects(const rdf::Term& subject, const rdf::Iri& predicate) const;
  std::vector<rdf::Term> subjects(const rdf::Iri& predicate, const rdf::Term& object) const;
  std::vector<rdf::Triple> with_predicate(const rdf::Iri& predicate) const;

 private:
  template <typename F>
  static void scan_prefix(const std::set<IdTriple>& index, IdTriple key, int fixed, F&& callback);

  TermDictionary dict_;
  std::set<IdTriple> spo_;
  std::set<IdTriple> pos_;
  std::set<IdTriple> osp_;
  std::map<rdf::Iri, std::set<IdTriple>> graphs_;
};

template <typename F>
void Dataset::scan_prefix(const std::set<IdTriple>& index, IdTriple key, int fixed, F&& callback) {
  for (int i = fixed; i < 3; ++i) key[i] = 0;
  for (auto it = index.lower_bound(key); it != index.end(); ++it) {
    for (int i = 0; i < fixed; ++i) {
      if ((*it)[i] != key[i]) return;
    }
    callback(*it);
  }
}

template <typename F>
void Dataset::scan(const std::array<std::optional<TermId>, 3>& ground, F&& callback) const {
  const auto& [s, p, o] = ground;
  const auto emit_if = [&](const IdTriple& spo) {
    if ((!s || spo[0] == *s) && (!p || spo[1] == *p) && (!o || spo[2] == *o)) callback(spo);
  };
  if (s && p) {
    scan_prefix(spo_, {*s, *p, o.value_or(0)}, o ? 3 : 2, emit_if);
  } else if (s && o) {
    scan_prefix(osp_, {*o, *s, 0}, 2,
                [&](const IdTriple& t) { emit_if({t[1], t[2], t[0]}); });
  } else if (s) {
    scan_prefix(spo_, {*s, 0, 0}, 1, emit_if);
  } else if (p) {
    scan_prefix(pos_, {*p, o.value_or(0), 0}, o ? 2 : 1,
                [&](const IdTriple& t) { emit_if({t[2], t[0], t[1]}); });
  } else if (o) {
    scan_prefix(osp_, {*o, 0, 0}, 1,
                [&](const IdTriple& t) { emit_if({t[1], t[2], t[0]}); });
  } else {
    for (const auto& t : spo_) callback(t);
  }
}

}  // namespace docgraph::store
