// v2xalloc: spectrum and power allocation for latency-constrained V2V links
// sharing cellular uplink bands, with a slot-level Monte-Carlo validator.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "v2x/cli.hpp"
#include "validation/criteria.hpp"

namespace {

int run_validate(const std::string& only, const std::string& mutate, bool quick,
                 unsigned workers) {
  v2x::validation::Options opts;
  opts.workers = workers;
  opts.quick = quick;
  opts.mutate = mutate;

  std::vector<v2x::validation::CriterionResult> results;
  try {
    if (only.empty()) {
      results = v2x::validation::run_all(opts);
    } else {
      results.push_back(v2x::validation::run_criterion(only, opts));
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return v2x::kExitRuntimeError;
  }

  bool all_passed = true;
  for (const auto& criterion : results) {
    all_passed = all_passed && criterion.passed;
    std::printf("[%s] %s (%.1fs)\n", criterion.passed ? "PASS" : "FAIL",
                criterion.name.c_str(), criterion.seconds);
    for (const auto& row : criterion.rows) {
      std::printf("  %-58s expected %-13.6g observed %-13.6g tol %-10.3g %s\n",
                  row.metric.c_str(), row.expected, row.observed, row.tolerance,
                  row.pass ? "ok" : "FAIL");
    }
  }
  std::printf("%s\n", all_passed ? "all criteria passed" : "CRITERIA FAILED");
  return all_passed ? v2x::kExitComplete : v2x::kExitValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum and power allocation for latency-constrained V2V "
               "links with ARQ retransmission"};
  app.require_subcommand(1);

  unsigned workers = 0;
  app.add_option("-j,--workers", workers, "worker threads (0 = hardware)");

  // allocate
  v2x::AllocateCommand alloc_cmd;
  double alloc_p0 = -1.0;
  std::uint64_t alloc_seed = 0;
  auto* alloc = app.add_subcommand("allocate", "solve one block allocation");
  alloc->add_option("-s,--scenario", alloc_cmd.scenario_path, "scenario file")
      ->required();
  alloc->add_option("-o,--out", alloc_cmd.out_csv, "write machine-readable CSV");
  auto* alloc_p0_opt = alloc->add_option(
      "--p0", alloc_p0, "fixed-outage mode with this threshold instead of the "
                        "latency-derived budget");
  auto* alloc_seed_opt =
      alloc->add_option("--seed", alloc_seed, "override the scenario rng_seed");

  // simulate
  v2x::SimulateCommand sim_cmd;
  double sim_p0 = -1.0;
  std::uint64_t sim_seed_override = 0;
  auto* sim = app.add_subcommand(
      "simulate", "allocate, then run the slot-level system simulation");
  sim->add_option("-s,--scenario", sim_cmd.scenario_path, "scenario file")
      ->required();
  sim->add_option("-o,--out", sim_cmd.out_csv, "write CSV rows");
  sim->add_option("--slots", sim_cmd.slots, "slots per trial (0 = block length)");
  sim->add_option("--warmup", sim_cmd.warmup, "warmup slots (-1 = 5%)");
  sim->add_option("--replications", sim_cmd.replications, "trials (seeds)");
  sim->add_option("--sim-seed", sim_cmd.sim_seed, "base simulation seed");
  auto* sim_p0_opt = sim->add_option("--p0", sim_p0, "fixed-outage mode threshold");
  auto* sim_seed_opt =
      sim->add_option("--seed", sim_seed_override, "override the scenario rng_seed");

  // sweep
  v2x::SweepCommand sweep_cmd;
  double sweep_p0 = -1.0;
  std::uint64_t sweep_seed_override = 0;
  auto* sweep = app.add_subcommand(
      "sweep", "parameter sweep with per-point allocation and simulation");
  sweep->add_option("-s,--scenario", sweep_cmd.scenario_path, "scenario file")
      ->required();
  sweep->add_option("-o,--out", sweep_cmd.out_csv, "write the sweep CSV");
  sweep->add_option("--param", sweep_cmd.parameter,
                    "swept parameter (arrival_rate_pps | latency_bound_s | "
                    "sinr_threshold_db | p0); default from [overrides]");
  sweep->add_option("--grid", sweep_cmd.grid, "grid values (comma separated)")
      ->delimiter(',');
  sweep->add_option("--replications", sweep_cmd.replications,
                    "simulation trials per grid point");
  sweep->add_option("--slots", sweep_cmd.slots, "slots per trial (0 = block length)");
  sweep->add_option("--sim-seed", sweep_cmd.sim_seed, "base simulation seed");
  auto* sweep_p0_opt = sweep->add_option(
      "--p0", sweep_p0, "also emit fixed-outage comparison rows (p0_ metrics)");
  auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed_override,
                                           "override the scenario rng_seed");

  // validate
  std::string only, mutate;
  bool quick = false;
  auto* validate = app.add_subcommand(
      "validate", "run the analysis-vs-simulation and oracle suites");
  validate->add_option("--only", only, "run a single criterion by name");
  validate->add_flag("--quick", quick, "reduced sample sizes (smoke run)");
  validate->add_option("--mutate", mutate, "sensitivity hook for testing")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  if (alloc->parsed()) {
    if (*alloc_p0_opt) alloc_cmd.fixed_outage = alloc_p0;
    if (*alloc_seed_opt) alloc_cmd.seed = alloc_seed;
    alloc_cmd.workers = workers;
    return v2x::run_allocate(alloc_cmd, std::cout, std::cerr);
  }
  if (sim->parsed()) {
    if (*sim_p0_opt) sim_cmd.fixed_outage = sim_p0;
    if (*sim_seed_opt) sim_cmd.seed = sim_seed_override;
    sim_cmd.workers = workers;
    return v2x::run_simulate(sim_cmd, std::cout, std::cerr);
  }
  if (sweep->parsed()) {
    if (*sweep_p0_opt) sweep_cmd.fixed_outage = sweep_p0;
    if (*sweep_seed_opt) sweep_cmd.seed = sweep_seed_override;
    sweep_cmd.workers = workers;
    return v2x::run_sweep(sweep_cmd, std::cout, std::cerr);
  }
  if (validate->parsed()) return run_validate(only, mutate, quick, workers);
  return v2x::kExitRuntimeError;
}
