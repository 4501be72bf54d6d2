#include "v2x/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "v2x/allocator.hpp"
#include "v2x/parallel.hpp"
#include "v2x/scenario.hpp"
#include "v2x/scenario_file.hpp"
#include "v2x/simulator.hpp"
#include "v2x/stats.hpp"

namespace v2x {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

int status_exit_code(AllocationStatus status) {
  switch (status) {
    case AllocationStatus::complete: return kExitComplete;
    case AllocationStatus::partial: return kExitPartial;
    case AllocationStatus::infeasible: return kExitInfeasible;
  }
  return kExitRuntimeError;
}

const char* status_name(AllocationStatus status) {
  switch (status) {
    case AllocationStatus::complete: return "complete";
    case AllocationStatus::partial: return "partial";
    case AllocationStatus::infeasible: return "infeasible";
  }
  return "?";
}

AllocatorOptions allocator_options(const std::optional<double>& fixed_outage,
                                   unsigned workers) {
  AllocatorOptions opts;
  opts.workers = workers;
  if (fixed_outage) {
    opts.mode = BudgetMode::fixed_outage;
    opts.fixed_outage_threshold = *fixed_outage;
  }
  return opts;
}

struct LoadedScenario {
  ScenarioFile file;
  Scenario scenario;
};

LoadedScenario load_and_generate(const std::string& path,
                                 const std::optional<std::uint64_t>& seed) {
  LoadedScenario out{load_scenario_file(path), {}};
  if (seed) out.file.config.rng_seed = *seed;
  out.scenario = generate_scenario(out.file.config);
  return out;
}

void write_file(const std::string& path, const std::string& content,
                std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot write " << path << "\n";
    throw std::runtime_error("cannot write " + path);
  }
  file << content;
}

std::string allocation_csv(const ScenarioConfig& config,
                           const AllocationResult& alloc) {
  std::ostringstream csv;
  csv << "kind,m,k,p_cue_dbm,p_due_dbm,outage,busy,capacity_bpshz,"
         "capacity_bps,sojourn_ms,meets_latency,meets_capacity\n";
  for (int m = 0; m < config.num_cues; ++m) {
    int k = alloc.matched_due(m);
    if (k >= 0) {
      const PairSolution& sol = alloc.pair(m, k);
      bool latency_ok = sol.sojourn <= config.latency_bound + 1e-12;
      bool capacity_ok = sol.capacity >= config.capacity_floor;
      csv << "pair," << m << "," << k << "," << fmt(watts_to_dbm(sol.p_cue))
          << "," << fmt(watts_to_dbm(sol.p_due)) << "," << fmt(sol.outage)
          << "," << fmt(sol.busy) << "," << fmt(sol.capacity) << ","
          << fmt(sol.capacity * config.bandwidth_hz) << ","
          << fmt(sol.sojourn * 1e3) << "," << (latency_ok ? 1 : 0) << ","
          << (capacity_ok ? 1 : 0) << "\n";
    } else {
      csv << "cue_only," << m << ",,"
          << fmt(watts_to_dbm(config.max_power_cue)) << ",,,0,"
          << fmt(alloc.cue_capacity[m]) << ","
          << fmt(alloc.cue_capacity[m] * config.bandwidth_hz) << ",,,"
          << (alloc.cue_capacity[m] >= config.capacity_floor ? 1 : 0) << "\n";
    }
  }
  for (int k : alloc.unmatched_dues)
    csv << "due_unmatched,," << k << ",,,,,,,,,\n";
  for (int k : alloc.infeasible_dues)
    csv << "due_infeasible,," << k << ",,,,,,,,,\n";
  return csv.str();
}

void allocation_text(std::ostream& out, const ScenarioConfig& config,
                     const AllocationResult& alloc) {
  out << "status: " << status_name(alloc.status) << "\n";
  out << "sum capacity: " << fmt(alloc.sum_capacity) << " bits/s/Hz ("
      << fmt(alloc.sum_capacity * config.bandwidth_hz / 1e6) << " Mbps at "
      << fmt(config.bandwidth_hz / 1e6) << " MHz per band)\n";
  out << "matched pairs: " << alloc.assignment.pairs.size() << " of "
      << config.num_dues << " DUEs\n";
  out << "  m    k   P_cue[dBm]  P_due[dBm]   outage     busy    R[b/s/Hz]  "
         "sojourn[ms]\n";
  for (auto [m, k] : alloc.assignment.pairs) {
    const PairSolution& sol = alloc.pair(m, k);
    char line[160];
    std::snprintf(line, sizeof(line),
                  "%3d  %3d  %10.2f  %10.2f  %8.5f  %7.4f  %9.4f  %11.5f\n", m,
                  k, watts_to_dbm(sol.p_cue), watts_to_dbm(sol.p_due),
                  sol.outage, sol.busy, sol.capacity, sol.sojourn * 1e3);
    out << line;
  }
  auto list = [&out](const char* name, const std::vector<int>& xs) {
    if (xs.empty()) return;
    out << name << ":";
    for (int x : xs) out << " " << x;
    out << "\n";
  };
  list("unmatched DUEs", alloc.unmatched_dues);
  list("infeasible DUEs (latency bound unattainable)", alloc.infeasible_dues);
}

struct MetricRow {
  std::string metric;
  std::string link;
  double analytic = std::numeric_limits<double>::quiet_NaN();
  double empirical = std::numeric_limits<double>::quiet_NaN();
  double halfwidth = std::numeric_limits<double>::quiet_NaN();
  int seeds = 0;
};

std::vector<MetricRow> system_metric_rows(const ScenarioConfig& config,
                                          const AllocationResult& alloc,
                                          const SystemSimReport& report,
                                          int seed_count,
                                          const std::string& prefix) {
  std::vector<MetricRow> rows;
  rows.push_back({prefix + "sum_capacity_bpshz", "all",
                  report.sum_capacity_analytic, report.sum_capacity_empirical,
                  report.sum_capacity_halfwidth, seed_count});
  rows.push_back({prefix + "status", "all",
                  static_cast<double>(status_exit_code(alloc.status)),
                  std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN(), seed_count});
  for (const auto& link : report.links) {
    std::string m_id = std::to_string(link.m);
    rows.push_back({prefix + "cue_capacity_bpshz", m_id, link.analytic_capacity,
                    link.stats.empirical_capacity,
                    link.stats.capacity_halfwidth, seed_count});
    if (!link.matched) continue;
    std::string k_id = std::to_string(link.k);
    rows.push_back({prefix + "due_sojourn_ms", k_id,
                    link.analytic_sojourn * 1e3, link.stats.mean_sojourn * 1e3,
                    link.stats.sojourn_halfwidth * 1e3, seed_count});
    rows.push_back({prefix + "due_outage", k_id, link.analytic_outage,
                    link.stats.empirical_outage,
                    std::numeric_limits<double>::quiet_NaN(), seed_count});
    rows.push_back({prefix + "due_busy", k_id, link.analytic_busy,
                    link.stats.empirical_busy,
                    ci_halfwidth(link.stats.per_seed_busy), seed_count});
  }
  (void)config;
  return rows;
}

SimConfig make_sim_config(const ScenarioConfig& config, std::int64_t slots,
                          std::int64_t warmup, std::uint64_t sim_seed,
                          int replications, unsigned workers) {
  SimConfig sim;
  sim.slots = slots > 0 ? slots : config.slots_per_block;
  sim.warmup_slots = warmup >= 0 ? warmup : sim.slots / 20;
  sim.seeds = SimConfig::seed_list(sim_seed, replications);
  sim.workers = workers;
  return sim;
}

}  // namespace

int run_allocate(const AllocateCommand& cmd, std::ostream& out,
                 std::ostream& err) {
  LoadedScenario loaded;
  try {
    loaded = load_and_generate(cmd.scenario_path, cmd.seed);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParseError;
  }
  try {
    AllocationResult alloc =
        allocate(loaded.file.config, loaded.scenario.gains,
                 allocator_options(cmd.fixed_outage, cmd.workers));
    allocation_text(out, loaded.file.config, alloc);
    if (!cmd.out_csv.empty())
      write_file(cmd.out_csv, allocation_csv(loaded.file.config, alloc), err);
    return status_exit_code(alloc.status);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitRuntimeError;
  }
}

int run_simulate(const SimulateCommand& cmd, std::ostream& out,
                 std::ostream& err) {
  LoadedScenario loaded;
  try {
    loaded = load_and_generate(cmd.scenario_path, cmd.seed);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParseError;
  }
  try {
    const ScenarioConfig& config = loaded.file.config;
    AllocationResult alloc =
        allocate(config, loaded.scenario.gains,
                 allocator_options(cmd.fixed_outage, cmd.workers));
    SimConfig sim = make_sim_config(config, cmd.slots, cmd.warmup, cmd.sim_seed,
                                    cmd.replications, cmd.workers);
    SystemSimReport report =
        simulate_system(alloc, loaded.scenario.gains, config, sim);

    std::vector<MetricRow> rows = system_metric_rows(
        config, alloc, report, static_cast<int>(sim.seeds.size()), "");
    out << "status: " << status_name(alloc.status) << "\n";
    out << "slots: " << sim.slots << "  seeds: " << sim.seeds.size()
        << "  warmup: " << sim.warmup_slots << "\n";
    out << "metric,link_id,analytic,empirical_mean,ci_halfwidth,seed_count\n";
    std::ostringstream csv;
    csv << "metric,link_id,analytic,empirical_mean,ci_halfwidth,seed_count\n";
    for (const auto& row : rows) {
      std::ostringstream line;
      line << row.metric << "," << row.link << "," << fmt(row.analytic) << ","
           << fmt(row.empirical) << "," << fmt(row.halfwidth) << ","
           << row.seeds << "\n";
      out << line.str();
      csv << line.str();
    }
    if (!cmd.out_csv.empty()) write_file(cmd.out_csv, csv.str(), err);
    return status_exit_code(alloc.status);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitRuntimeError;
  }
}

int run_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  LoadedScenario loaded;
  try {
    loaded = load_and_generate(cmd.scenario_path, cmd.seed);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitParseError;
  }

  SweepSpec spec;
  if (!cmd.parameter.empty()) {
    spec.parameter = cmd.parameter;
    spec.grid = cmd.grid;
    spec.replications = cmd.replications > 0 ? cmd.replications : 20;
  } else if (loaded.file.sweep) {
    spec = *loaded.file.sweep;
    if (cmd.replications > 0) spec.replications = cmd.replications;
    if (!cmd.grid.empty()) spec.grid = cmd.grid;
  } else {
    err << cmd.scenario_path
        << ": no sweep requested (no [overrides] section and no --param)\n";
    return kExitParseError;
  }
  if (spec.grid.empty()) {
    err << "sweep grid is empty\n";
    return kExitParseError;
  }

  // Each grid point gets an ordered slot in the output; points run in a
  // worker pool and may fail independently.
  struct PointOutput {
    std::vector<MetricRow> rows;
    std::string error;
  };
  std::vector<PointOutput> points(spec.grid.size());

  const ScenarioConfig& base = loaded.file.config;
  parallel_for(
      spec.grid.size(),
      [&](std::size_t i) {
        PointOutput& point = points[i];
        double value = spec.grid[i];
        try {
          ScenarioConfig config = apply_sweep_value(base, spec.parameter, value);
          config.validate();
          Scenario scenario = generate_scenario(config);
          std::vector<std::pair<std::string, AllocatorOptions>> modes;
          if (spec.parameter == "p0") {
            AllocatorOptions p0;
            p0.mode = BudgetMode::fixed_outage;
            p0.fixed_outage_threshold = value;
            modes.emplace_back("", p0);
          } else {
            modes.emplace_back("", AllocatorOptions{});
            if (cmd.fixed_outage) {
              AllocatorOptions p0;
              p0.mode = BudgetMode::fixed_outage;
              p0.fixed_outage_threshold = *cmd.fixed_outage;
              modes.emplace_back("p0_", p0);
            }
          }
          for (auto& [prefix, opts] : modes) {
            opts.workers = 1;
            AllocationResult alloc = allocate(config, scenario.gains, opts);
            SimConfig sim = make_sim_config(config, cmd.slots, -1, cmd.sim_seed,
                                            spec.replications, 1);
            SystemSimReport report =
                simulate_system(alloc, scenario.gains, config, sim);
            auto rows = system_metric_rows(config, alloc, report,
                                           spec.replications, prefix);
            point.rows.insert(point.rows.end(), rows.begin(), rows.end());
          }
        } catch (const std::exception& e) {
          point.error = e.what();
        }
      },
      cmd.workers);

  std::ostringstream csv;
  csv << "sweep_param,value,metric,link_id,analytic,empirical_mean,"
         "ci_halfwidth,seed_count\n";
  bool any_error = false;
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    std::string value = fmt(spec.grid[i]);
    if (!points[i].error.empty()) {
      any_error = true;
      err << "grid point " << value << ": " << points[i].error << "\n";
      csv << spec.parameter << "," << value << ",error,all,1,,,\n";
      continue;
    }
    for (const auto& row : points[i].rows)
      csv << spec.parameter << "," << value << "," << row.metric << ","
          << row.link << "," << fmt(row.analytic) << "," << fmt(row.empirical)
          << "," << fmt(row.halfwidth) << "," << row.seeds << "\n";
  }
  out << csv.str();
  if (!cmd.out_csv.empty()) {
    try {
      write_file(cmd.out_csv, csv.str(), err);
    } catch (const std::exception&) {
      return kExitRuntimeError;
    }
  }
  return any_error ? kExitRuntimeError : kExitComplete;
}

}  // namespace v2x
