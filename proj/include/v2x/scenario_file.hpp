#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "v2x/scenario.hpp"

namespace v2x {

// Parameter sweep requested by a scenario file's [overrides] section: the
// named scalar key takes each grid value in turn, with `replications`
// simulation seeds per grid point.
struct SweepSpec {
  std::string parameter;      // arrival_rate_pps | latency_bound_s |
                              // sinr_threshold_db | p0
  std::vector<double> grid;
  int replications = 20;
};

struct ScenarioFile {
  ScenarioConfig config;
  std::optional<SweepSpec> sweep;
};

// Flat key = value scenario document; see scenarios/highway.cfg for the
// schema. Powers are accepted in dBm (or watts), the SINR threshold in dB (or
// linear), shadowing in dB, everything else in SI units. Errors carry
// file:line anchors. Throws std::runtime_error on parse errors and
// std::invalid_argument on semantic ones.
ScenarioFile load_scenario_file(const std::string& path);
ScenarioFile parse_scenario_text(const std::string& text, const std::string& name);

// Returns a copy of `config` with one swept parameter applied. "p0" is not a
// config field and is handled by the caller (allocator mode).
ScenarioConfig apply_sweep_value(const ScenarioConfig& config,
                                 const std::string& parameter, double value);

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace v2x
