#pragma once

// Acceptance criteria: every analytical quantity checked against an
// independent route at a pinned tolerance, with fixed seeds. `run_all`
// executes the full suite; a non-passing criterion is a defect, not noise.

#include <cstdint>
#include <string>
#include <vector>

namespace v2x::validation {

struct CheckRow {
  std::string metric;
  double expected;
  double observed;
  double tolerance;  // |expected - observed| <= tolerance
  bool pass;
};

struct CriterionResult {
  std::string name;
  std::vector<CheckRow> rows;
  bool passed = true;
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 424243;
  unsigned workers = 0;
  bool quick = false;         // shrink Monte-Carlo sizes for smoke runs
  std::string mutate;         // test hook, e.g. "sojourn-vacation-residual"
};

const std::vector<std::string>& criterion_names();
CriterionResult run_criterion(const std::string& name, const Options& opts);
std::vector<CriterionResult> run_all(const Options& opts);

}  // namespace v2x::validation
