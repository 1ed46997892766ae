#pragma once

namespace docgraph {

// Selects between the serial reference kernels and their OpenMP versions.
// Both produce identical, identically ordered results.
enum class Execution { kSerial, kParallel };

}  // namespace docgraph
