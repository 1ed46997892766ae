#include "docgraph/store/dataset.hpp"

#include <limits>

namespace docgraph::store {

namespace {

bool is_name_char(char c, bool first) {
  const bool alpha = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  if (first) return alpha;
  return alpha || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool Variable::is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (!is_name_char(name[i], i == 0)) return false;
  }
  return true;
}

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) throw InvalidTerm("invalid variable name: '" + name_ + "'");
}

TermId TermDictionary::intern(const rdf::Term& t) {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  if (terms_.size() >= std::numeric_limits<TermId>::max()) throw Error("term dictionary is full");
  const auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> TermDictionary::find(const rdf::Term& t) const {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  return std::nullopt;
}

bool Dataset::insert(const rdf::Iri& source, const rdf::Triple& t) {
  const IdTriple spo{dict_.intern(t.subject), dict_.intern(t.predicate), dict_.intern(t.object)};
  if (spo_.insert(spo).second) {
    pos_.insert({spo[1], spo[2], spo[0]});
    osp_.insert({spo[2], spo[0], spo[1]});
  }
  return graphs_[source].insert(spo).second;
}

std::size_t Dataset::index_size(IndexOrder order) const {
  switch (order) {
    case IndexOrder::kSpo: return spo_.size();
    case IndexOrder::kPos: return pos_.size();
    case IndexOrder::kOsp: return osp_.size();
  }
  return 0;
}

std::vector<rdf::Iri> Dataset::graph_names() const {
  std::vector<rdf::Iri> names;
  names.reserve(graphs_.size());
  for (const auto& [name, _] : graphs_) names.push_back(name);
  return names;
}

std::size_t Dataset::graph_size(const rdf::Iri& graph) const {
  auto it = graphs_.find(graph);
  return it == graphs_.end() ? 0 : it->second.size();
}

std::vector<rdf::Triple> Dataset::graph_triples(const rdf::Iri& graph) const {
  std::vector<rdf::Triple> out;
  auto it = graphs_.find(graph);
  if (it == graphs_.end()) return out;
  out.reserve(it->second.size());
  for (const auto& t : it->second) {
    out.emplace_back(dict_.term(t[0]), std::get<rdf::Iri>(dict_.term(t[1])), dict_.term(t[2]));
  }
  return out;
}

std::vector<rdf::Iri> Dataset::sources_of(const rdf::Triple& t) const {
  std::vector<rdf::Iri> out;
  const auto s = dict_.find(t.subject);
  const auto p = dict_.find(t.predicate);
  const auto o = dict_.find(t.object);
  if (!s || !p || !o) return out;
  const IdTriple key{*s, *p, *o};
  for (const auto& [name, graph] : graphs_) {
    if (graph.contains(key)) out.push_back(name);
  }
  return out;
}

std::vector<rdf::Triple> Dataset::triples() const {
  std::vector<rdf::Triple> out;
  out.reserve(spo_.size());
  for (const auto& t : spo_) {
    out.emplace_back(dict_.term(t[0]), std::get<rdf::Iri>(dict_.term(t[1])), dict_.term(t[2]));
  }
  return out;
}

bool Dataset::contains(const rdf::Triple& t) const {
  const auto s = dict_.find(t.subject);
  const auto p = dict_.find(t.predicate);
  const auto o = dict_.find(t.object);
  return s && p && o && spo_.contains({*s, *p, *o});
}

std::vector<Binding> Dataset::match(const TriplePattern& p) const {
  std::vector<Binding> out;
  std::array<std::optional<TermId>, 3> ground;
  std::array<const Variable*, 3> vars{nullptr, nullptr, nullptr};
  const std::array<const PatternTerm*, 3> positions{&p.subject, &p.predicate, &p.object};
  for (int i = 0; i < 3; ++i) {
    if (const auto* v = std::get_if<Variable>(positions[i])) {
      vars[i] = v;
    } else {
      ground[i] = dict_.find(std::get<rdf::Term>(*positions[i]));
      if (!ground[i]) return out;  // term unknown to the dataset
    }
  }
  scan(ground, [&](const IdTriple& t) {
    Binding b;
    for (int i = 0; i < 3; ++i) {
      if (vars[i] == nullptr) continue;
      const rdf::Term& value = dict_.term(t[i]);
      auto [it, inserted] = b.try_emplace(vars[i]->name(), value);
      if (!inserted && it->second != value) return;  // repeated variable, inconsistent
    }
    out.push_back(std::move(b));
  });
  return out;
}

std::vector<rdf::Term> Dataset::objects(const rdf::Term& subject, const rdf::Iri& predicate) const {
  std::vector<rdf::Term> out;
  const auto s = dict_.find(subject);
  const auto p = dict_.find(predicate);
  if (!s || !p) return out;
  scan({s, p, std::nullopt}, [&](const IdTriple& t) { out.push_back(dict_.term(t[2])); });
  return out;
}

std::vector<rdf::Term> Dataset::subjects(const rdf::Iri& predicate, const rdf::Term& object) const {
  std::vector<rdf::Term> out;
  const auto p = dict_.find(predicate);
  const auto o = dict_.find(object);
  if (!p || !o) return out;
  scan({std::nullopt, p, o}, [&](const IdTriple& t) { out.push_back(dict_.term(t[0])); });
  return out;
}

std::vector<rdf::Triple> Dataset::with_predicate(const rdf::Iri& predicate) const {
  std::vector<rdf::Triple> out;
  const auto p = dict_.find(predicate);
  if (!p) return out;
  scan({std::nullopt, p, std::nullopt}, [&](const IdTriple& t) {
    out.emplace_back(dict_.term(t[0]), predicate, dict_.term(t[2]));
  });
  return out;
}

}  // namespace docgraph::store
