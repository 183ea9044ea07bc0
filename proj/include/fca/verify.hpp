#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fca {

struct SuiteOptions {
  /// Contexts up to this many objects and attributes are enumerated
  /// exhaustively (all incidence relations, including 0- and 1-sized shapes).
  std::size_t exhaustive_max = 2;
  /// Number of seeded random contexts for the oracle comparison; the other
  /// randomized criteria use at most 200 and 100 of these respectively.
  std::size_t random_count = 500;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;  // falsification messages, capped
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;

  bool ok() const {
    for (const auto& c : criteria)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs every acceptance criterion; deterministic for fixed options.
SuiteResult run_suite(const SuiteOptions& opt);

}  // namespace fca
