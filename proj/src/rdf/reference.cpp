#include "docgraph/rdf/reference.hpp"

#include <optional>
#include <string>

namespace docgraph::rdf {

namespace {

struct Components {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

bool is_scheme_char(char c, bool first) {
  const bool alpha = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  if (first) return alpha;
  return alpha || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

Components split(std::string_view s) {
  Components c;
  // scheme
  std::size_t i = 0;
  while (i < s.size() && is_scheme_char(s[i], i == 0)) ++i;
  if (i > 0 && i < s.size() && s[i] == ':') {
    c.scheme = std::string(s.substr(0, i));
    s.remove_prefix(i + 1);
  }
  if (const auto hash = s.find('#'); hash != std::string_view::npos) {
    c.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (const auto q = s.find('?'); q != std::string_view::npos) {
    c.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.starts_with("//")) {
    s.remove_prefix(2);
    const auto slash = s.find('/');
    c.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  c.path = std::string(s);
  return c;
}

std::string remove_dot_segments(std::string_view in) {
  std::string input(in);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input.size() == 3 ? std::string("/") : input.replace(0, 4, "/");
      const auto last = output.rfind('/');
      output.erase(last == std::string::npos ? 0 : last);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      const std::size_t start = input.front() == '/' ? 1 : 0;
      const auto next = input.find('/', start);
      const std::size_t len = next == std::string::npos ? input.size() : next;
      output.append(input, 0, len);
      input.erase(0, len);
    }
  }
  return output;
}

std::string merge(const Components& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  const auto last = base.path.rfind('/');
  if (last == std::string::npos) return std::string(ref_path);
  return base.path.substr(0, last + 1) + std::string(ref_path);
}

std::string recompose(const Components& c) {
  std::string out;
  if (c.scheme) out += *c.scheme + ":";
  if (c.authority) out += "//" + *c.authority;
  out += c.path;
  if (c.query) out += "?" + *c.query;
  if (c.fragment) out += "#" + *c.fragment;
  return out;
}

}  // namespace

Iri resolve_reference(std::string_view ref, const Iri& base) {
  for (unsigned char ch : ref) {
    if (ch <= 0x20 || ch == 0x7f) {
      throw MalformedReference("malformed IRI reference: '" + std::string(ref) + "'");
    }
  }
  const Components r = split(ref);
  const Components b = split(base.str());
  Components t;
  if (r.scheme) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        t.path = r.path.front() == '/' ? remove_dot_segments(r.path)
                                       : remove_dot_segments(merge(b, r.path));
        t.query = r.query;
      }
      t.authority = b.authority;
    }
    t.scheme = b.scheme;
  }
  t.fragment = r.fragment;
  std::string result = recompose(t);
  if (!Iri::is_valid(result)) {
    throw MalformedReference("reference '" + std::string(ref) + "' does not resolve to a valid IRI");
  }
  return Iri(std::move(result));
}

}  // namespace docgraph::rdf
