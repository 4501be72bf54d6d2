#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "v2x/power.hpp"
#include "v2x/rng.hpp"

namespace v2x {

// All physical, protocol, and QoS parameters of one network block. Stored in
// SI units and linear ratios; file parsing converts dBm/dB inputs.
struct ScenarioConfig {
  int num_cues = 0;                 // M
  int num_dues = 0;                 // K <= M
  double slot_length = 0.0;         // seconds
  std::int64_t slots_per_block = 0; // L

  double pathloss_constant = 0.0;   // G
  double decay_exponent = 0.0;      // phi
  double shadow_std_db = 0.0;       // xi, shared across link families
  // Per-family overrides; negative means "use shadow_std_db".
  double shadow_std_cue_bs_db = -1.0;
  double shadow_std_due_direct_db = -1.0;
  double shadow_std_due_bs_db = -1.0;
  double shadow_std_cue_due_db = -1.0;

  double noise_power = 0.0;         // watts
  double sinr_threshold = 0.0;      // linear
  double latency_bound = 0.0;       // seconds, > slot_length
  double capacity_floor = 0.0;      // bits/s/Hz
  double bandwidth_hz = 1e6;        // for bits/s reporting only
  double max_power_cue = 0.0;       // watts
  double max_power_due = 0.0;       // watts
  std::vector<double> arrival_rates;  // packets/s, one per DUE

  // Road geometry: straight multi-lane highway crossing a disc cell with the
  // base station at the origin; lane i runs at
  // y = road_offset + (i + 0.5) * lane_width.
  double cell_radius = 0.0;         // meters
  double road_offset = 0.0;         // meters, BS to road edge
  int lane_count = 0;
  double lane_width = 0.0;          // meters
  double vehicle_speed = 0.0;       // m/s
  double vehicle_density = 0.0;     // vehicles per meter per lane; 0 = derive
                                    // from a 2.5 s headway at vehicle_speed
  double due_gap = 0.0;             // meters between DUE tx and rx, same lane

  std::uint64_t rng_seed = 1;

  double arrival_rate(int k) const { return arrival_rates.at(k); }
  // Throws std::invalid_argument describing every violated constraint.
  void validate() const;
};

// Per-link large-scale power gains of one block.
struct LinkGains {
  Eigen::VectorXd cue_to_bs;    // M
  Eigen::VectorXd due_direct;   // K
  Eigen::VectorXd due_to_bs;    // K
  Eigen::MatrixXd cue_to_due;   // M x K, (m, k) = CUE m tx -> DUE k rx
};

struct Scenario {
  LinkGains gains;
  std::vector<Eigen::Vector2d> cue_pos;
  std::vector<Eigen::Vector2d> due_tx_pos;
  std::vector<Eigen::Vector2d> due_rx_pos;
};

// Pathloss times log-normal shadowing: G * beta * d^-phi.
double pathloss_gain(double pathloss_constant, double decay_exponent,
                     double shadow_linear, double distance);

// Places vehicles on the configured road, draws shadowing, and computes all
// four gain families. Deterministic given (config, config.rng_seed); each
// gain family consumes its own RNG substream.
Scenario generate_scenario(const ScenarioConfig& config);

// i.i.d. unit-mean exponential power gains, one per channel use.
Eigen::ArrayXd fading_draw(Rng& rng, int count);

// Channel view of the (m, k) candidate pair.
PairChannel pair_channel(const ScenarioConfig& config, const LinkGains& gains,
                         int m, int k);

}  // namespace v2x
