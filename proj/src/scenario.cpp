#include "v2x/scenario.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace v2x {

namespace {

// Substream ids for scenario generation.
enum StreamId : std::uint64_t {
  kStreamGeometry = 1,
  kStreamShadowCueBs = 2,
  kStreamShadowDueDirect = 3,
  kStreamShadowDueBs = 4,
  kStreamShadowCueDue = 5,
};

double shadow_linear(Rng& rng, double std_db) {
  return std::pow(10.0, std_db * rng.normal() / 10.0);
}

double family_std(double override_db, double shared_db) {
  return override_db >= 0.0 ? override_db : shared_db;
}

double checked_distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  double d = (a - b).norm();
  if (d <= 0.0)
    throw std::invalid_argument("scenario geometry places two nodes at zero distance");
  return d;
}

}  // namespace

void ScenarioConfig::validate() const {
  std::ostringstream problems;
  auto bad = [&](const char* message) { problems << "  - " << message << "\n"; };

  if (num_dues < 1) bad("num_dues must be >= 1");
  if (num_cues < num_dues) bad("num_cues must be >= num_dues");
  if (!(slot_length > 0.0)) bad("slot_length must be > 0");
  if (slots_per_block < 1) bad("slots_per_block must be >= 1");
  if (!(pathloss_constant > 0.0)) bad("pathloss_constant must be > 0");
  if (!std::isfinite(decay_exponent) || decay_exponent < 0.0)
    bad("decay_exponent must be >= 0");
  if (!(shadow_std_db >= 0.0)) bad("shadow_std_db must be >= 0");
  if (!(noise_power > 0.0)) bad("noise_power must be > 0");
  if (!(sinr_threshold > 0.0)) bad("sinr_threshold must be > 0");
  if (!(latency_bound > slot_length)) bad("latency_bound must exceed slot_length");
  if (!(capacity_floor >= 0.0)) bad("capacity_floor must be >= 0");
  if (!(bandwidth_hz > 0.0)) bad("bandwidth_hz must be > 0");
  if (!(max_power_cue > 0.0)) bad("max_power_cue must be > 0");
  if (!(max_power_due > 0.0)) bad("max_power_due must be > 0");
  if (static_cast<int>(arrival_rates.size()) != num_dues)
    bad("arrival_rates must have one entry per DUE");
  for (double lambda : arrival_rates) {
    if (!(lambda >= 0.0) || !(lambda * slot_length < 1.0)) {
      bad("every arrival rate must satisfy 0 <= rate and rate*slot_length < 1");
      break;
    }
  }
  if (!(cell_radius > 0.0)) bad("cell_radius must be > 0");
  if (!(road_offset >= 0.0)) bad("road_offset must be >= 0");
  if (lane_count < 1) bad("lane_count must be >= 1");
  if (!(lane_width > 0.0)) bad("lane_width must be > 0");
  if (!(vehicle_speed > 0.0)) bad("vehicle_speed must be > 0");
  if (vehicle_density < 0.0) bad("vehicle_density must be >= 0");
  if (!(due_gap > 0.0)) bad("due_gap must be > 0");
  if (cell_radius <= road_offset + lane_count * lane_width)
    bad("cell_radius must exceed the far road edge (road_offset + lanes*width)");

  std::string text = problems.str();
  if (!text.empty())
    throw std::invalid_argument("invalid scenario config:\n" + text);
}

double pathloss_gain(double pathloss_constant, double decay_exponent,
                     double shadow_linear, double distance) {
  if (!(distance > 0.0))
    throw std::invalid_argument("pathloss distance must be > 0");
  return pathloss_constant * shadow_linear * std::pow(distance, -decay_exponent);
}

Scenario generate_scenario(const ScenarioConfig& config) {
  config.validate();
  const int m_count = config.num_cues;
  const int k_count = config.num_dues;

  double density = config.vehicle_density;
  if (density == 0.0) density = 1.0 / (2.5 * config.vehicle_speed);

  // Drop segment: long enough to hold all transmitters at the configured
  // density, capped at the chord the far lane cuts through the cell disc.
  double far_edge = config.road_offset + config.lane_count * config.lane_width;
  double chord = 2.0 * std::sqrt(config.cell_radius * config.cell_radius -
                                 far_edge * far_edge);
  double segment = static_cast<double>(m_count + k_count) /
                   (density * config.lane_count);
  segment = std::min(segment, chord);

  Rng geom = Rng::stream(config.rng_seed, {kStreamGeometry});
  auto drop_vehicle = [&]() {
    int lane = static_cast<int>(geom.index(config.lane_count));
    double x = geom.uniform(-segment / 2.0, segment / 2.0);
    double y = config.road_offset + (lane + 0.5) * config.lane_width;
    return Eigen::Vector2d(x, y);
  };

  Scenario scenario;
  scenario.cue_pos.reserve(m_count);
  for (int m = 0; m < m_count; ++m) scenario.cue_pos.push_back(drop_vehicle());
  scenario.due_tx_pos.reserve(k_count);
  scenario.due_rx_pos.reserve(k_count);
  for (int k = 0; k < k_count; ++k) {
    Eigen::Vector2d tx = drop_vehicle();
    scenario.due_tx_pos.push_back(tx);
    scenario.due_rx_pos.push_back(tx - Eigen::Vector2d(config.due_gap, 0.0));
  }

  const Eigen::Vector2d bs(0.0, 0.0);
  LinkGains& g = scenario.gains;
  g.cue_to_bs.resize(m_count);
  g.due_direct.resize(k_count);
  g.due_to_bs.resize(k_count);
  g.cue_to_due.resize(m_count, k_count);

  Rng sh_cue_bs = Rng::stream(config.rng_seed, {kStreamShadowCueBs});
  double std_cue_bs = family_std(config.shadow_std_cue_bs_db, config.shadow_std_db);
  for (int m = 0; m < m_count; ++m) {
    g.cue_to_bs[m] = pathloss_gain(config.pathloss_constant, config.decay_exponent,
                                   shadow_linear(sh_cue_bs, std_cue_bs),
                                   checked_distance(scenario.cue_pos[m], bs));
  }

  Rng sh_due = Rng::stream(config.rng_seed, {kStreamShadowDueDirect});
  double std_due = family_std(config.shadow_std_due_direct_db, config.shadow_std_db);
  for (int k = 0; k < k_count; ++k) {
    g.due_direct[k] = pathloss_gain(
        config.pathloss_constant, config.decay_exponent,
        shadow_linear(sh_due, std_due),
        checked_distance(scenario.due_tx_pos[k], scenario.due_rx_pos[k]));
  }

  Rng sh_due_bs = Rng::stream(config.rng_seed, {kStreamShadowDueBs});
  double std_due_bs = family_std(config.shadow_std_due_bs_db, config.shadow_std_db);
  for (int k = 0; k < k_count; ++k) {
    g.due_to_bs[k] = pathloss_gain(config.pathloss_constant, config.decay_exponent,
                                   shadow_linear(sh_due_bs, std_due_bs),
                                   checked_distance(scenario.due_tx_pos[k], bs));
  }

  Rng sh_cross = Rng::stream(config.rng_seed, {kStreamShadowCueDue});
  double std_cross = family_std(config.shadow_std_cue_due_db, config.shadow_std_db);
  for (int m = 0; m < m_count; ++m)
    for (int k = 0; k < k_count; ++k) {
      g.cue_to_due(m, k) = pathloss_gain(
          config.pathloss_constant, config.decay_exponent,
          shadow_linear(sh_cross, std_cross),
          checked_distance(scenario.cue_pos[m], scenario.due_rx_pos[k]));
    }

  return scenario;
}

Eigen::ArrayXd fading_draw(Rng& rng, int count) {
  if (count < 0) throw std::invalid_argument("fading draw count must be >= 0");
  Eigen::ArrayXd out(count);
  for (int i = 0; i < count; ++i) out[i] = rng.exponential();
  return out;
}

PairChannel pair_channel(const ScenarioConfig& config, const LinkGains& gains,
                         int m, int k) {
  PairChannel ch;
  ch.alpha_cue_bs = gains.cue_to_bs[m];
  ch.alpha_due = gains.due_direct[k];
  ch.alpha_due_bs = gains.due_to_bs[k];
  ch.alpha_cue_due = gains.cue_to_due(m, k);
  ch.noise_power = config.noise_power;
  ch.sinr_threshold = config.sinr_threshold;
  return ch;
}

}  // namespace v2x
