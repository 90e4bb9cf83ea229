#pragma once

// Named verification suites shared by the `verify` command and the
// acceptance run. Each suite is deterministic given its seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "kjdt/equivalence.hpp"

namespace kjdt {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random instances for the seeded suites.
  int instances = 1000;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  std::vector<std::string> lines;
  /// Every coefficient the suite computed, for the sign audit.
  std::vector<CoefficientRecord> records;

  void note(const std::string& line) { lines.push_back(line); }
  void fail(const std::string& line);
  /// Counts one check; records `what` as a failure when `ok` is false.
  void expect(bool ok, const std::string& what);
  nlohmann::json to_json() const;
};

SuiteResult suite_star_table();
SuiteResult suite_buch();
SuiteResult suite_identity();
SuiteResult suite_ideal_sheaf();
SuiteResult suite_rect_orders();
SuiteResult suite_superstandard();
SuiteResult suite_dual_equivalence();
SuiteResult suite_origin_invariants();
SuiteResult suite_sharpness();
SuiteResult suite_involution(const SuiteOptions& options);
SuiteResult suite_rev_rect();
SuiteResult suite_products();
SuiteResult suite_classical();

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Increasing filling of `shape` drawn step by step: each box takes the
/// smallest allowed value plus a random gap in [0, spread].
IncreasingTableau random_increasing(const SkewShape& shape, std::mt19937_64& rng, int spread);

}  // namespace kjdt
