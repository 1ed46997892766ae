#pragma once

#include <iosfwd>

namespace docgraph::cli {

// Runs one CLI invocation. Returns the process exit code: 0 on success,
// 1 for data errors (message on `err`), 2 for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace docgraph::cli
