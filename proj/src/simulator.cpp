#include "v2x/simulator.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "v2x/parallel.hpp"
#include "v2x/queueing.hpp"
#include "v2x/stats.hpp"

namespace v2x {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxAttemptBins = 64;

// RNG substream roles within one (seed, link) trial.
enum StreamRole : std::uint64_t {
  kRoleArrivals = 1,
  kRoleFailure = 2,      // Bernoulli failure driver
  kRoleDueDirect = 3,    // DUE tx -> DUE rx fading
  kRoleDueCross = 4,     // CUE tx -> DUE rx fading
  kRoleCueDirect = 5,    // CUE tx -> BS fading
  kRoleCueInterf = 6,    // DUE tx -> BS fading
};

struct TrialResult {
  std::int64_t arrived = 0;
  std::int64_t departed = 0;
  double sum_sojourn = 0.0;
  std::int64_t attempts = 0;
  std::int64_t failures = 0;
  std::int64_t busy_slots = 0;       // within the measurement window
  std::int64_t window_slots = 0;
  double queue_len_sum = 0.0;        // slot-start samples within the window
  double half_len_sum[2] = {0.0, 0.0};  // per block half, for the growth test
  std::int64_t half_samples[2] = {0, 0};
  std::int64_t end_backlog = 0;      // packets in system at the block end
  double capacity_sum = 0.0;
  std::int64_t capacity_slots = 0;
  std::vector<std::int64_t> attempts_hist;
  bool drained = true;

  double mean_sojourn() const {
    return departed > 0 ? sum_sojourn / static_cast<double>(departed) : 0.0;
  }
  double busy_fraction() const {
    return window_slots > 0
               ? static_cast<double>(busy_slots) / static_cast<double>(window_slots)
               : 0.0;
  }
  // Unstable queues leave a linear growth signature: the second half of the
  // block holds clearly more backlog than the first, and the block ends with
  // a standing queue.
  bool looks_unstable() const {
    if (!drained) return true;
    if (half_samples[0] == 0 || half_samples[1] == 0) return false;
    double first = half_len_sum[0] / static_cast<double>(half_samples[0]);
    double second = half_len_sum[1] / static_cast<double>(half_samples[1]);
    return end_backlog > 10 && second > 1.8 * first;
  }
};

// One trial of the slotted FCFS queue with one-slot vacations: a packet
// arriving during slot n is first eligible for service in slot n+1, and a
// successful attempt departs at the end of its slot. Arrivals cover
// [0, slots*T); the run continues past the block until the queue drains,
// capped at one extra block length.
//
// fail_fn() is invoked once per transmitting slot. slot_hook(interfering) is
// invoked once per in-block slot and accounts the co-channel link.
template <class FailFn, class SlotHook>
TrialResult run_trial(double arrival_rate, double slot, std::int64_t slots,
                      std::int64_t warmup, Rng& arrival_rng, FailFn&& fail_fn,
                      SlotHook&& slot_hook) {
  TrialResult r;
  r.attempts_hist.assign(kMaxAttemptBins, 0);

  const double horizon = static_cast<double>(slots) * slot;
  const std::int64_t drain_cap = 2 * slots;
  std::deque<double> queue;
  double next_arrival =
      arrival_rate > 0.0 ? arrival_rng.exponential() / arrival_rate : kInf;
  int head_attempts = 0;

  for (std::int64_t n = 0;; ++n) {
    const bool in_block = n < slots;
    if (n == slots) r.end_backlog = static_cast<std::int64_t>(queue.size());
    if (!in_block) {
      if (queue.empty()) break;
      if (n >= drain_cap) {
        r.drained = false;
        break;
      }
    }
    const double slot_start = static_cast<double>(n) * slot;

    while (next_arrival < slot_start && next_arrival < horizon) {
      queue.push_back(next_arrival);
      ++r.arrived;
      next_arrival += arrival_rng.exponential() / arrival_rate;
    }

    const bool busy = !queue.empty();
    if (in_block && n >= warmup) {
      ++r.window_slots;
      r.queue_len_sum += static_cast<double>(queue.size());
      if (busy) ++r.busy_slots;
    }
    if (in_block) {
      int half = n < slots / 2 ? 0 : 1;
      r.half_len_sum[half] += static_cast<double>(queue.size());
      ++r.half_samples[half];
    }

    if (busy) {
      ++head_attempts;
      ++r.attempts;
      if (fail_fn()) {
        ++r.failures;
      } else {
        r.sum_sojourn += slot_start + slot - queue.front();
        ++r.departed;
        queue.pop_front();
        std::size_t bin = std::min<std::size_t>(head_attempts, kMaxAttemptBins) - 1;
        ++r.attempts_hist[bin];
        head_attempts = 0;
      }
    }

    if (in_block) slot_hook(busy);
  }
  return r;
}

struct NoHook {
  void operator()(bool) const {}
};

SimStats aggregate(const std::vector<TrialResult>& trials, double arrival_rate,
                   double slot, std::int64_t slots, bool has_capacity) {
  SimStats stats;
  stats.attempts_histogram.assign(kMaxAttemptBins, 0);
  std::int64_t attempts = 0;
  std::int64_t failures = 0;
  std::vector<double> queue_lens;
  const double horizon = static_cast<double>(slots) * slot;

  for (const TrialResult& t : trials) {
    stats.packets_arrived += t.arrived;
    stats.packets_served += t.departed;
    attempts += t.attempts;
    failures += t.failures;
    stats.stable = stats.stable && !t.looks_unstable();
    stats.per_seed_sojourn.push_back(t.mean_sojourn());
    stats.per_seed_busy.push_back(t.busy_fraction());
    if (has_capacity && t.capacity_slots > 0)
      stats.per_seed_capacity.push_back(t.capacity_sum /
                                        static_cast<double>(t.capacity_slots));
    // Slot-start samples miss the within-slot residence of arriving packets,
    // which averages lambda*T/2; add it back so the estimate is the
    // time-average number in system.
    double lambda_hat = horizon > 0.0 ? static_cast<double>(t.arrived) / horizon : 0.0;
    if (t.window_slots > 0)
      queue_lens.push_back(t.queue_len_sum / static_cast<double>(t.window_slots) +
                           lambda_hat * slot / 2.0);
    for (std::size_t j = 0; j < kMaxAttemptBins; ++j)
      stats.attempts_histogram[j] += t.attempts_hist[j];
  }

  stats.mean_sojourn = mean(stats.per_seed_sojourn);
  stats.sojourn_halfwidth = ci_halfwidth(stats.per_seed_sojourn);
  stats.empirical_outage =
      attempts > 0 ? static_cast<double>(failures) / static_cast<double>(attempts)
                   : 0.0;
  stats.empirical_busy = mean(stats.per_seed_busy);
  stats.mean_queue_len = mean(queue_lens);
  if (has_capacity) {
    stats.empirical_capacity = mean(stats.per_seed_capacity);
    stats.capacity_halfwidth = ci_halfwidth(stats.per_seed_capacity);
  }
  (void)arrival_rate;
  return stats;
}

void check_sim(const SimConfig& sim) {
  if (sim.slots < 1) throw std::invalid_argument("simulation needs at least 1 slot");
  if (sim.warmup_slots < 0 || sim.warmup_slots >= sim.slots)
    throw std::invalid_argument("warmup must lie in [0, slots)");
  if (sim.seeds.empty()) throw std::invalid_argument("simulation needs at least 1 seed");
}

SimStats simulate_pair_link(double p_due, double p_cue, const PairChannel& ch,
                            double arrival_rate, double slot,
                            const SimConfig& sim, std::uint64_t link_id) {
  check_sim(sim);
  std::vector<TrialResult> trials(sim.seeds.size());
  parallel_for(
      sim.seeds.size(),
      [&](std::size_t i) {
        std::uint64_t seed = sim.seeds[i];
        Rng arrivals = Rng::stream(seed, {link_id, kRoleArrivals});
        Rng due_direct = Rng::stream(seed, {link_id, kRoleDueDirect});
        Rng due_cross = Rng::stream(seed, {link_id, kRoleDueCross});
        Rng cue_direct = Rng::stream(seed, {link_id, kRoleCueDirect});
        Rng cue_interf = Rng::stream(seed, {link_id, kRoleCueInterf});
        const double signal = p_due * ch.alpha_due;
        const double cross = p_cue * ch.alpha_cue_due;
        const std::int64_t measured_from = sim.warmup_slots;
        std::int64_t slot_index = 0;
        double capacity_sum = 0.0;
        std::int64_t capacity_slots = 0;
        trials[i] = run_trial(
            arrival_rate, slot, sim.slots, sim.warmup_slots, arrivals,
            [&]() {
              // Decode failure: faded SINR below the detection threshold.
              double num = signal * due_direct.exponential();
              double den = ch.noise_power + cross * due_cross.exponential();
              return num < ch.sinr_threshold * den;
            },
            [&](bool interfering) {
              double den = ch.noise_power;
              if (interfering)
                den += p_due * ch.alpha_due_bs * cue_interf.exponential();
              double snr = p_cue * ch.alpha_cue_bs * cue_direct.exponential() / den;
              if (slot_index >= measured_from) {
                capacity_sum += std::log2(1.0 + snr);
                ++capacity_slots;
              }
              ++slot_index;
            });
        trials[i].capacity_sum = capacity_sum;
        trials[i].capacity_slots = capacity_slots;
      },
      sim.workers);
  return aggregate(trials, arrival_rate, slot, sim.slots, /*has_capacity=*/true);
}

}  // namespace

std::vector<std::uint64_t> SimConfig::seed_list(std::uint64_t base, int count) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(count);
  for (int i = 0; i < count; ++i) seeds.push_back(base + static_cast<std::uint64_t>(i));
  return seeds;
}

SimStats simulate_due_queue(double arrival_rate, double slot, double outage,
                            const SimConfig& sim) {
  check_sim(sim);
  if (!(arrival_rate >= 0.0) || !(slot > 0.0) || !(arrival_rate * slot < 1.0))
    throw std::invalid_argument("need 0 <= arrival_rate and arrival_rate*slot < 1");
  if (!(outage >= 0.0 && outage < 1.0))
    throw std::invalid_argument("outage must lie in [0, 1)");

  std::vector<TrialResult> trials(sim.seeds.size());
  parallel_for(
      sim.seeds.size(),
      [&](std::size_t i) {
        std::uint64_t seed = sim.seeds[i];
        Rng arrivals = Rng::stream(seed, {0, kRoleArrivals});
        Rng failure = Rng::stream(seed, {0, kRoleFailure});
        trials[i] = run_trial(
            arrival_rate, slot, sim.slots, sim.warmup_slots, arrivals,
            [&]() { return failure.uniform() < outage; }, NoHook{});
      },
      sim.workers);
  return aggregate(trials, arrival_rate, slot, sim.slots, /*has_capacity=*/false);
}

SimStats simulate_pair(double p_due, double p_cue, const PairChannel& ch,
                       double arrival_rate, double slot, const SimConfig& sim) {
  return simulate_pair_link(p_due, p_cue, ch, arrival_rate, slot, sim, 0);
}

SystemSimReport simulate_system(const AllocationResult& result,
                                const LinkGains& gains,
                                const ScenarioConfig& config,
                                const SimConfig& sim) {
  check_sim(sim);
  SystemSimReport report;

  // One row per CUE band: its matched pair if any, else the lone uplink.
  std::vector<SystemSimReport::LinkRow> rows(config.num_cues);
  for (int m = 0; m < config.num_cues; ++m) {
    SystemSimReport::LinkRow& row = rows[m];
    row.m = m;
    row.k = result.matched_due(m);
    row.matched = row.k >= 0;
    if (row.matched) {
      const PairSolution& sol = result.pair(m, row.k);
      row.analytic_sojourn = sol.sojourn;
      row.analytic_outage = sol.outage;
      row.analytic_busy = sol.busy;
      row.analytic_capacity = sol.capacity;
    } else {
      row.analytic_capacity = capacity_no_interference(
          config.max_power_cue, gains.cue_to_bs[m], config.noise_power);
    }
  }

  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        SystemSimReport::LinkRow& row = rows[i];
        SimConfig link_sim = sim;
        link_sim.workers = 1;  // parallelism lives at the link level here
        if (row.matched) {
          const PairSolution& sol = result.pair(row.m, row.k);
          row.stats = simulate_pair_link(
              sol.p_due, sol.p_cue, pair_channel(config, gains, row.m, row.k),
              config.arrival_rate(row.k), config.slot_length, link_sim,
              static_cast<std::uint64_t>(row.m) + 1);
        } else {
          PairChannel ch;
          ch.alpha_cue_bs = gains.cue_to_bs[row.m];
          ch.alpha_due = 1.0;
          ch.alpha_due_bs = 1.0;
          ch.alpha_cue_due = 1.0;
          ch.noise_power = config.noise_power;
          ch.sinr_threshold = config.sinr_threshold;
          row.stats = simulate_pair_link(0.0, config.max_power_cue, ch, 0.0,
                                         config.slot_length, link_sim,
                                         static_cast<std::uint64_t>(row.m) + 1);
        }
      },
      sim.workers);

  report.links = std::move(rows);
  double hw_sq = 0.0;
  for (const auto& row : report.links) {
    report.sum_capacity_analytic += row.analytic_capacity;
    report.sum_capacity_empirical += row.stats.empirical_capacity;
    hw_sq += row.stats.capacity_halfwidth * row.stats.capacity_halfwidth;
  }
  report.sum_capacity_halfwidth = std::sqrt(hw_sq);
  return report;
}

}  // namespace v2x
