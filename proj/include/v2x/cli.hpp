#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace v2x {

// Exit codes of the command-line surface.
inline constexpr int kExitComplete = 0;        // allocation served every DUE
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitParseError = 2;      // scenario file rejected
inline constexpr int kExitInfeasible = 3;      // some latency bound unattainable
inline constexpr int kExitPartial = 4;         // some DUE left without spectrum
inline constexpr int kExitValidationFailed = 5;

struct AllocateCommand {
  std::string scenario_path;
  std::string out_csv;                   // empty = no CSV file
  std::optional<double> fixed_outage;    // run in fixed-outage mode when set
  std::optional<std::uint64_t> seed;     // overrides the file's rng_seed
  unsigned workers = 0;
};

struct SimulateCommand {
  std::string scenario_path;
  std::string out_csv;
  std::optional<double> fixed_outage;
  std::optional<std::uint64_t> seed;
  std::int64_t slots = 0;     // 0 = scenario's slots_per_block
  std::int64_t warmup = -1;   // -1 = 5% of slots
  int replications = 20;
  std::uint64_t sim_seed = 1;
  unsigned workers = 0;
};

struct SweepCommand {
  std::string scenario_path;
  std::string out_csv;
  std::string parameter;                 // empty = from [overrides]
  std::vector<double> grid;              // empty = from [overrides]
  int replications = 0;                  // 0 = file value (default 20)
  std::optional<double> fixed_outage;    // adds p0-mode comparison rows
  std::optional<std::uint64_t> seed;
  std::int64_t slots = 0;
  std::uint64_t sim_seed = 1;
  unsigned workers = 0;
};

// Single-block allocation: human-readable report on `out`, machine-readable
// CSV rows when out_csv is set. Returns an exit code.
int run_allocate(const AllocateCommand& cmd, std::ostream& out, std::ostream& err);

// Allocation followed by the slot-level system simulation; emits analytic vs
// empirical rows per link.
int run_simulate(const SimulateCommand& cmd, std::ostream& out, std::ostream& err);

// Parameter sweep: one allocation + simulation per grid value, CSV rows
// ordered by grid index. Per-point failures become `error` rows.
int run_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace v2x
