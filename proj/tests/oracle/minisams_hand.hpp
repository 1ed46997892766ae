#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle::minisams {

// The fixture collection written out by hand, one entry per triple of each
// document's named graph. IRIs are full strings; literals start with '"'
// and carry their datatype after "^^" unless they are plain strings.
struct HandTriple {
  std::string graph;
  std::string s;
  std::string p;
  std::string o;
};

const std::vector<HandTriple>& triples();

// Merged view: the distinct (s, p, o) of triples().
std::set<std::tuple<std::string, std::string, std::string>> merged();

std::string doc(const std::string& name);       // .../samsdocs/<name>
std::string employee(const std::string& name);  // .../employees#<name>

// Plain nested-loop joins over merged(), written without the library.

// Names of substitutes for `employee` with the date filter on documents
// later than `cutoff` (YYYY-MM-DD), following the query's join order.
std::set<std::string> substitute_names(const std::string& employee, const std::string& cutoff);

struct Coverage {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t unverified = 0;
};
Coverage coverage();

// Definitions of the symbol plus those of all symbols sharing its notation.
std::set<std::string> definitions(const std::string& symbol);

}  // namespace oracle::minisams
