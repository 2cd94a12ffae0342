#pragma once

#include "kmorbit/affine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kmorbit {

struct SelfcheckOptions {
  std::uint64_t seed = 20240917;
  int cases = 50;
  AlgebraOptions algebra;
};

struct SuiteReport {
  std::string name;
  int passed = 0;
  int failed = 0;
  /// First failing case, minimized where the suite knows how.
  std::string counterexample;
};

/// Runs the bundled invariant suites. Each suite draws from its own generator
/// seeded by (seed, suite index), so reports are reproducible.
std::vector<SuiteReport> run_selfcheck(const SelfcheckOptions& opts);

} // namespace kmorbit
