#include "docgraph/rdfa/extract.hpp"

#include <map>
#include <optional>
#include <variant>

namespace docgraph::rdfa {

using rdf::BlankNode;
using rdf::Iri;
using rdf::Literal;
using rdf::Term;

const rdf::PrefixMap& initial_prefixes() {
  static const rdf::PrefixMap prefixes = [] {
    rdf::PrefixMap p;
    p.set("rdf", std::string(rdf::ns::kRdf));
    p.set("rdfs", std::string(rdf::ns::kRdfs));
    p.set("xsd", std::string(rdf::ns::kXsd));
    return p;
  }();
  return prefixes;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string normalize_space(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

bool is_absolute_scheme(std::string_view prefix, std::string_view rest) {
  return rest.starts_with("//") || prefix == "urn" || prefix == "mailto" || prefix == "tag" ||
         prefix == "file" || prefix == "data";
}

// A subject or object resource. Hanging relations use a lazily labelled
// blank node so labels stay dense when the node is never referenced.
struct NodeRef {
  std::variant<Term, std::size_t> value;
};

struct Context {
  rdf::PrefixMap prefixes;
  std::optional<std::string> vocab;
  NodeRef parent_subject;
  NodeRef parent_object;
  std::vector<Iri> incomplete;
  std::optional<std::size_t> pending;  // completion flag for `incomplete`
};

class Extractor {
 public:
  Extractor(const Iri& base, const ExtractOptions& options) : base_(base), options_(options) {}

  ExtractionResult run(const XmlElement& root) {
    Context ctx{initial_prefixes(), std::nullopt, NodeRef{Term(base_)}, NodeRef{Term(base_)}, {}, {}};
    process(root, ctx);
    return std::move(result_);
  }

 private:
  void warn(const XmlElement& el, std::string message) {
    result_.warnings.push_back({el.position, std::move(message)});
  }

  BlankNode next_blank() {
    return BlankNode(options_.blank_prefix + std::to_string(counter_++));
  }

  NodeRef fresh() { return NodeRef{Term(next_blank())}; }

  NodeRef lazy() {
    lazy_.emplace_back();
    return NodeRef{lazy_.size() - 1};
  }

  Term materialize(const NodeRef& ref) {
    if (const auto* t = std::get_if<Term>(&ref.value)) return *t;
    auto& slot = lazy_[std::get<std::size_t>(ref.value)];
    if (!slot) slot = next_blank();
    return *slot;
  }

  NodeRef user_blank(std::string_view label) {
    auto [it, inserted] = user_labels_.try_emplace(std::string(label), std::nullopt);
    if (inserted) it->second = next_blank();
    return NodeRef{Term(*it->second)};
  }

  void emit(const NodeRef& s, const Iri& p, const NodeRef& o) {
    result_.triples.emplace_back(materialize(s), p, materialize(o));
  }

  void emit(const NodeRef& s, const Iri& p, Term o) {
    result_.triples.emplace_back(materialize(s), p, std::move(o));
  }

  void declare_prefixes(const XmlElement& el, Context& local) {
    for (const auto& [key, value] : el.attributes) {
      if (!key.starts_with("xmlns:")) continue;
      if (!Iri::is_valid(value)) {
        warn(el, "ignoring namespace declaration " + key + " with invalid IRI '" + value + "'");
        continue;
      }
      local.prefixes.set(key.substr(6), value);
    }
    if (const auto* decl = el.attribute("prefix")) {
      const auto parts = tokens(*decl);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string_view name = parts[i];
        if (!name.ends_with(':') || i + 1 >= parts.size()) {
          warn(el, "malformed @prefix entry '" + std::string(name) + "'");
          continue;
        }
        const std::string_view iri = parts[++i];
        if (!Iri::is_valid(iri)) {
          warn(el, "ignoring @prefix " + std::string(name) + " with invalid IRI '" +
                       std::string(iri) + "'");
          continue;
        }
        local.prefixes.set(std::string(name.substr(0, name.size() - 1)), std::string(iri));
      }
    }
    if (const auto* vocab = el.attribute("vocab")) {
      if (vocab->empty()) {
        local.vocab.reset();
      } else {
        try {
          local.vocab = resolve_reference(*vocab, base_).str();
        } catch (const Error& e) {
          warn(el, std::string("ignoring @vocab: ") + e.what());
        }
      }
    }
  }

  // TERMorCURIEorAbsIRI, as used by typeof/property/rel/datatype.
  std::optional<Iri> expand_term(const XmlElement& el, const Context& local, std::string_view token,
                                 std::string_view attr) {
    try {
      if (const auto parts = rdf::split_curie(token)) {
        const auto [prefix, rest] = *parts;
        if (prefix == "_") {
          warn(el, "blank node '" + std::string(token) + "' not allowed in @" + std::string(attr));
          return std::nullopt;
        }
        if (const auto ns = local.prefixes.find(prefix)) return Iri(*ns + std::string(rest));
        if (is_absolute_scheme(prefix, rest) && Iri::is_valid(token)) return Iri(std::string(token));
        warn(el, "unknown prefix '" + std::string(prefix) + "' in @" + std::string(attr));
        return std::nullopt;
      }
      if (local.vocab) return Iri(*local.vocab + std::string(token));
      warn(el, "term '" + std::string(token) + "' in @" + std::string(attr) + " without @vocab");
    } catch (const InvalidTerm& e) {
      warn(el, std::string("invalid IRI in @") + std::string(attr) + ": " + e.what());
    }
    return std::nullopt;
  }

  std::vector<Iri> term_list(const XmlElement& el, const Context& local, std::string_view attr) {
    std::vector<Iri> out;
    if (const auto* value = el.attribute(attr)) {
      for (const auto token : tokens(*value)) {
        if (auto iri = expand_term(el, local, token, attr)) out.push_back(std::move(*iri));
      }
    }
    return out;
  }

  // SafeCURIEorCURIEorIRI, as used by about/resource.
  std::optional<NodeRef> resource_attr(const XmlElement& el, const Context& local,
                                       std::string_view attr) {
    const auto* value = el.attribute(attr);
    if (value == nullptr) return std::nullopt;
    std::string_view v = *value;
    try {
      if (v.size() >= 2 && v.front() == '[' && v.back() == ']') {
        const std::string_view inner = v.substr(1, v.size() - 2);
        if (inner.starts_with("_:")) return user_blank(inner.substr(2));
        const auto parts = rdf::split_curie(inner);
        if (parts) {
          if (const auto ns = local.prefixes.find(parts->first)) {
            return NodeRef{Term(Iri(*ns + std::string(parts->second)))};
          }
        }
        warn(el, "ignoring @" + std::string(attr) + ": invalid safe CURIE '" + *value + "'");
        return std::nullopt;
      }
      if (v.starts_with("_:")) return user_blank(v.substr(2));
      if (const auto parts = rdf::split_curie(v)) {
        if (const auto ns = local.prefixes.find(parts->first)) {
          return NodeRef{Term(Iri(*ns + std::string(parts->second)))};
        }
      }
      return NodeRef{Term(resolve_reference(v, base_))};
    } catch (const Error& e) {
      warn(el, "ignoring @" + std::string(attr) + ": " + e.what());
    }
    return std::nullopt;
  }

  std::optional<NodeRef> href_attr(const XmlElement& el) {
    const auto* value = el.attribute("href");
    if (value == nullptr) return std::nullopt;
    try {
      return NodeRef{Term(resolve_reference(*value, base_))};
    } catch (const Error& e) {
      warn(el, std::string("ignoring @href: ") + e.what());
    }
    return std::nullopt;
  }

  void process(const XmlElement& el, const Context& ctx) {
    Context local{ctx.prefixes, ctx.vocab, ctx.parent_subject, ctx.parent_object, {}, {}};
    declare_prefixes(el, local);

    const auto about = resource_attr(el, local, "about");
    const auto resource = resource_attr(el, local, "resource");
    const auto href = href_attr(el);
    const auto types = term_list(el, local, "typeof");
    const auto properties = term_list(el, local, "property");
    const auto rels = term_list(el, local, "rel");
    const std::string* content = el.attribute("content");
    const std::string* datatype = el.attribute("datatype");

    const bool has_rel = !rels.empty();
    const bool has_property = !properties.empty();
    const bool has_typeof = !types.empty();

    std::optional<NodeRef> new_subject;
    std::optional<NodeRef> current_object;
    std::optional<NodeRef> typed;
    bool skip = false;

    if (!has_rel) {
      if (has_property && content == nullptr && datatype == nullptr) {
        new_subject = about ? *about : ctx.parent_object;
        if (has_typeof) {
          typed = about ? *about : resource ? *resource : href ? *href : fresh();
          current_object = typed;
        }
      } else {
        if (about) {
          new_subject = about;
        } else if (resource) {
          new_subject = resource;
        } else if (href) {
          new_subject = href;
        } else if (has_typeof) {
          new_subject = fresh();
        } else {
          new_subject = ctx.parent_object;
          skip = !has_property;
        }
        if (has_typeof) typed = new_subject;
      }
    } else {
      new_subject = about ? *about : ctx.parent_object;
      if (has_typeof && about) typed = new_subject;
      if (resource) {
        current_object = resource;
      } else if (href) {
        current_object = href;
      } else if (has_typeof && !about) {
        current_object = fresh();
      }
      if (has_typeof && !about) typed = current_object;
    }

    if (typed) {
      for (const auto& t : types) emit(*typed, rdf::rdf_type(), Term(t));
    }

    if (has_rel) {
      if (current_object) {
        for (const auto& r : rels) emit(*new_subject, r, *current_object);
      } else {
        local.incomplete = rels;
        local.pending = completed_.size();
        completed_.push_back(false);
        current_object = lazy();
      }
    }

    if (has_property) emit_properties(el, local, properties, *new_subject, about, resource, href,
                                      typed, has_rel, content, datatype);

    if (!skip && !ctx.incomplete.empty()) {
      for (const auto& r : ctx.incomplete) emit(ctx.parent_subject, r, *new_subject);
      completed_[*ctx.pending] = true;
    }

    Context child = skip ? Context{local.prefixes, local.vocab, ctx.parent_subject,
                                   ctx.parent_object, ctx.incomplete, ctx.pending}
                         : Context{local.prefixes, local.vocab, *new_subject,
                                   current_object ? *current_object : *new_subject,
                                   local.incomplete, local.pending};
    for (const auto& c : el.elements) process(c, child);

    if (local.pending && !completed_[*local.pending]) {
      std::string names;
      for (const auto& r : local.incomplete) names += (names.empty() ? "" : " ") + r.str();
      warn(el, "@rel " + names + " has no object: no @resource, @href or descendant subject");
    }
  }

  void emit_properties(const XmlElement& el, const Context& local, const std::vector<Iri>& properties,
                       const NodeRef& subject, const std::optional<NodeRef>& about,
                       const std::optional<NodeRef>& resource, const std::optional<NodeRef>& href,
                       const std::optional<NodeRef>& typed, bool has_rel, const std::string* content,
                       const std::string* datatype) {
    std::optional<Term> object;
    if (datatype != nullptr && !datatype->empty()) {
      const auto dt = expand_term(el, local, *datatype, "datatype");
      if (!dt) return;
      object = Literal(content ? *content : normalize_space(el.text()), *dt);
    } else if (datatype != nullptr) {
      object = Literal(content ? *content : normalize_space(el.text()));
    } else if (content != nullptr) {
      object = Literal(*content);
    } else if (!has_rel && (resource || href)) {
      object = materialize(resource ? *resource : *href);
    } else if (typed && !about) {
      object = materialize(*typed);
    } else {
      object = Literal(normalize_space(el.text()));
    }
    if (const auto* lit = std::get_if<Literal>(&*object); lit && !lit->is_well_formed()) {
      warn(el, "malformed " + lit->datatype.str() + " literal '" + lit->lexical + "'");
    }
    for (const auto& p : properties) emit(subject, p, *object);
  }

  const Iri& base_;
  const ExtractOptions& options_;
  ExtractionResult result_;
  std::size_t counter_ = 0;
  std::vector<std::optional<BlankNode>> lazy_;
  std::vector<bool> completed_;
  std::map<std::string, std::optional<BlankNode>> user_labels_;
};

}  // namespace

ExtractionResult extract(const XmlElement& doc, const rdf::Iri& base, const ExtractOptions& options) {
  if (!BlankNode::is_valid_label(options.blank_prefix + "0")) {
    throw InvalidTerm("invalid blank node prefix '" + options.blank_prefix + "'");
  }
  return Extractor(base, options).run(doc);
}

}  // namespace docgraph::rdfa
