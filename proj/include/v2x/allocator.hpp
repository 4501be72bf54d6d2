#pragma once

#include <Eigen/Dense>
#include <vector>

#include "v2x/matching.hpp"
#include "v2x/power.hpp"
#include "v2x/scenario.hpp"

namespace v2x {

// How the per-DUE outage budget is obtained: inverted from the latency bound
// (the default), or pinned to a fixed threshold that ignores latency (the
// comparison mode swept in the experiment harness).
enum class BudgetMode { latency, fixed_outage };

struct AllocatorOptions {
  BudgetMode mode = BudgetMode::latency;
  double fixed_outage_threshold = 0.1;  // used only in fixed_outage mode
  unsigned workers = 0;                 // 0 = hardware concurrency
};

enum class AllocationStatus {
  complete,    // every DUE matched
  partial,     // some DUE left without spectrum by the matching
  infeasible,  // some DUE's latency bound is unattainable even alone
};

struct AllocationResult {
  Assignment assignment;
  // Row-major M x K table of per-pair optima; index m * num_dues + k.
  std::vector<PairSolution> per_pair;
  // Matching weights after the capacity-floor filter; -inf = excluded pair.
  Eigen::MatrixXd weights;
  std::vector<int> unmatched_dues;    // feasible budget but no spectrum
  std::vector<int> infeasible_dues;   // latency bound unattainable (latency mode)
  std::vector<double> outage_budgets; // per DUE; NaN when unattainable
  std::vector<double> due_sojourn;    // seconds; NaN unmatched, +inf unstable
  std::vector<double> cue_capacity;   // bits/s/Hz; interference-free if unmatched
  double sum_capacity = 0.0;          // sum of cue_capacity over all CUEs
  AllocationStatus status = AllocationStatus::complete;

  int num_cues() const { return static_cast<int>(cue_capacity.size()); }
  int num_dues() const { return static_cast<int>(due_sojourn.size()); }
  // -1 when CUE m is unmatched.
  int matched_due(int m) const;
  const PairSolution& pair(int m, int k) const {
    return per_pair[static_cast<std::size_t>(m) * num_dues() + k];
  }
};

// Full pipeline for one block: per-DUE outage budgets, all M x K pair power
// optima in parallel, capacity-floor filtering, maximum-weight matching, and
// the assembled QoS report. Deterministic for a given (config, gains).
AllocationResult allocate(const ScenarioConfig& config, const LinkGains& gains,
                          const AllocatorOptions& opts = {});

// Sum ergodic capacity over all CUEs implied by `result`: matched CUEs at
// their pair optimum, unmatched CUEs interference-free at full power.
// Recomputed from the assignment, not read back from the result fields.
double total_objective(const AllocationResult& result, const LinkGains& gains,
                       const ScenarioConfig& config);

}  // namespace v2x
