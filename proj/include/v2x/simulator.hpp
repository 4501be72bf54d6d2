#pragma once

#include <cstdint>
#include <vector>

#include "v2x/allocator.hpp"
#include "v2x/power.hpp"
#include "v2x/scenario.hpp"

namespace v2x {

// Slot-level Monte-Carlo setup. One independent trial runs per seed; trial
// substreams are derived from (seed, link id, channel role) so results do not
// depend on scheduling order.
struct SimConfig {
  std::int64_t slots = 20000;
  std::int64_t warmup_slots = 1000;  // excluded from busy/capacity averages
  std::vector<std::uint64_t> seeds = {1};
  unsigned workers = 0;

  static std::vector<std::uint64_t> seed_list(std::uint64_t base, int count);
};

// Aggregates across trials. Sojourn statistics cover every packet arriving in
// [0, slots*T), with the queue drained past the block end; busy, outage, and
// capacity averages cover slots [warmup, slots). Confidence half-widths are
// 95% t-intervals across seeds.
struct SimStats {
  double mean_sojourn = 0.0;        // seconds
  double sojourn_halfwidth = 0.0;
  double empirical_outage = 0.0;    // failed attempts / attempts
  double empirical_busy = 0.0;      // transmitting slots / measured slots
  double empirical_capacity = 0.0;  // bits/s/Hz (pair simulations only)
  double capacity_halfwidth = 0.0;
  double mean_queue_len = 0.0;      // time-average packets in system
  std::int64_t packets_arrived = 0;
  std::int64_t packets_served = 0;
  bool stable = true;               // false when any trial failed to drain
  std::vector<double> per_seed_sojourn;
  std::vector<double> per_seed_busy;
  std::vector<double> per_seed_capacity;
  // Pooled service-time distribution: count of packets needing j attempts,
  // histogram index j-1.
  std::vector<std::int64_t> attempts_histogram;
};

// Single transmitter queue with Poisson arrivals, FCFS service, one attempt
// per slot, and an independent Bernoulli(outage) failure per attempt. A
// packet arriving during a slot enters service at the next slot boundary at
// the earliest; sojourn is departure instant minus arrival instant.
SimStats simulate_due_queue(double arrival_rate, double slot, double outage,
                            const SimConfig& sim);

// Full channel-level pair simulation: fresh Rayleigh draws for all four links
// each slot, SINR-threshold failures for the DUE, and the CUE's per-slot rate
// accumulated into an empirical ergodic capacity. The DUE interferes only in
// slots where its queue is non-empty; the CUE transmits in every slot.
SimStats simulate_pair(double p_due, double p_cue, const PairChannel& ch,
                       double arrival_rate, double slot, const SimConfig& sim);

struct SystemSimReport {
  struct LinkRow {
    int m = -1;              // CUE index, -1 for none
    int k = -1;              // DUE index, -1 for unmatched CUE rows
    bool matched = false;
    SimStats stats;
    double analytic_sojourn = 0.0;
    double analytic_outage = 0.0;
    double analytic_busy = 0.0;
    double analytic_capacity = 0.0;
  };
  std::vector<LinkRow> links;
  double sum_capacity_analytic = 0.0;
  double sum_capacity_empirical = 0.0;
  double sum_capacity_halfwidth = 0.0;  // root-sum-square of link half-widths
};

// Simulates every matched pair plus the interference-free unmatched CUEs of
// an allocation. Matched pairs and unmatched CUEs occupy orthogonal bands, so
// links run independently (and data-parallel).
SystemSimReport simulate_system(const AllocationResult& result,
                                const LinkGains& gains,
                                const ScenarioConfig& config,
                                const SimConfig& sim);

}  // namespace v2x
