#include "v2x/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "v2x/queueing.hpp"
#include "v2x/specfun.hpp"

namespace v2x {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

void check_channel(const PairChannel& ch) {
  require(std::isfinite(ch.alpha_cue_bs) && ch.alpha_cue_bs > 0.0 &&
              std::isfinite(ch.alpha_due) && ch.alpha_due > 0.0 &&
              std::isfinite(ch.alpha_due_bs) && ch.alpha_due_bs > 0.0 &&
              std::isfinite(ch.alpha_cue_due) && ch.alpha_cue_due > 0.0,
          "channel gains must be finite and > 0");
  require(std::isfinite(ch.noise_power) && ch.noise_power >= 0.0,
          "noise power must be >= 0");
  require(std::isfinite(ch.sinr_threshold) && ch.sinr_threshold > 0.0,
          "SINR threshold must be > 0");
}

void check_budget(double outage_budget) {
  require(std::isfinite(outage_budget) && outage_budget > 0.0 && outage_budget < 1.0,
          "outage budget must lie in (0, 1)");
}

// e^{1/a} E1(1/a), the ergodic log term of a unit-mean exponential SNR with
// mean a; tends to 0 as a -> 0.
double ergodic_log_term(double a) {
  if (a <= 0.0) return 0.0;
  return scaled_e1(1.0 / a);
}

}  // namespace

double outage_level_cue_power(double p_due, const PairChannel& ch,
                              double outage_budget) {
  check_channel(ch);
  check_budget(outage_budget);
  require(std::isfinite(p_due) && p_due > 0.0, "DUE power must be > 0");
  double signal = p_due * ch.alpha_due;
  return signal / (ch.sinr_threshold * ch.alpha_cue_due) *
         (std::exp(-ch.sinr_threshold * ch.noise_power / signal) /
              (1.0 - outage_budget) -
          1.0);
}

std::optional<double> outage_level_due_power(double p_cue_target,
                                             const PairChannel& ch,
                                             double outage_budget,
                                             double bracket_hint) {
  check_channel(ch);
  check_budget(outage_budget);
  require(std::isfinite(p_cue_target) && p_cue_target > 0.0,
          "target CUE power must be > 0");
  require(std::isfinite(bracket_hint) && bracket_hint > 0.0,
          "bracket hint must be > 0");

  // Smallest DUE power with a non-negative level-set CUE power; the function
  // is strictly increasing to the right of it.
  double lo = 0.0;
  if (ch.noise_power > 0.0) {
    lo = ch.sinr_threshold * ch.noise_power /
         (-ch.alpha_due * std::log1p(-outage_budget));
  }

  double hi = std::max(bracket_hint, lo * 2.0);
  if (hi <= 0.0) hi = 1.0;
  int doublings = 0;
  while (outage_level_cue_power(hi, ch, outage_budget) < p_cue_target) {
    hi *= 2.0;
    if (++doublings > 200) return std::nullopt;
  }

  while ((hi - lo) > 1e-10 * hi) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (outage_level_cue_power(mid, ch, outage_budget) < p_cue_target)
      lo = mid;
    else
      hi = mid;
  }
  // Upper endpoint: the achieved outage stays at or below the budget.
  return hi;
}

double capacity_no_interference(double p_cue, double alpha_cue_bs,
                                double noise_power) {
  require(std::isfinite(p_cue) && p_cue >= 0.0, "CUE power must be >= 0");
  require(std::isfinite(alpha_cue_bs) && alpha_cue_bs > 0.0,
          "channel gain must be > 0");
  require(std::isfinite(noise_power) && noise_power > 0.0,
          "noise power must be > 0");
  if (p_cue == 0.0) return 0.0;
  double snr = p_cue * alpha_cue_bs / noise_power;
  return ergodic_log_term(snr) / kLn2;
}

double pair_capacity(double p_due, double p_cue, const PairChannel& ch,
                     double busy_prob) {
  check_channel(ch);
  require(std::isfinite(p_due) && p_due >= 0.0, "DUE power must be >= 0");
  require(std::isfinite(p_cue) && p_cue >= 0.0, "CUE power must be >= 0");
  require(std::isfinite(busy_prob) && busy_prob >= 0.0 && busy_prob <= 1.0,
          "busy probability must lie in [0, 1]");
  require(ch.noise_power > 0.0, "noise power must be > 0");

  if (p_cue == 0.0) return 0.0;
  double a = p_cue * ch.alpha_cue_bs / ch.noise_power;
  double b = p_due * ch.alpha_due_bs / ch.noise_power;
  double clean = ergodic_log_term(a);

  double interfered;
  if (b == 0.0) {
    interfered = clean;
  } else if (std::fabs(a - b) < 1e-9 * std::max(a, b)) {
    // Both exponential terms share the mean; the difference quotient
    // degenerates to the derivative: a * d/da [e^{1/a} E1(1/a)] = 1 - clean/a.
    interfered = 1.0 - clean / a;
  } else {
    interfered = a * (clean - ergodic_log_term(b)) / (a - b);
  }
  return ((1.0 - busy_prob) * clean + busy_prob * interfered) / kLn2;
}

PairSolution optimal_pair_powers(const PairChannel& ch, double outage_budget,
                                 double arrival_rate, double slot,
                                 double p_max_due, double p_max_cue) {
  check_channel(ch);
  check_budget(outage_budget);
  require(std::isfinite(p_max_due) && p_max_due > 0.0 &&
              std::isfinite(p_max_cue) && p_max_cue > 0.0,
          "power limits must be > 0");

  PairSolution sol;
  double cue_at_cap = outage_level_cue_power(p_max_due, ch, outage_budget);
  if (!(cue_at_cap > 0.0)) {
    // The budget is out of reach even with zero interference; a zero-power
    // CUE has no capacity, so the pair is unusable either way.
    sol.outage = outage_probability(p_max_due, 0.0, ch.alpha_due,
                                    ch.alpha_cue_due, ch.noise_power,
                                    ch.sinr_threshold);
    sol.p_due = p_max_due;
    return sol;
  }

  if (cue_at_cap >= p_max_cue) {
    sol.p_cue = p_max_cue;
    auto p_due = outage_level_due_power(p_max_cue, ch, outage_budget, p_max_due);
    sol.p_due = p_due ? std::min(*p_due, p_max_due) : p_max_due;
  } else {
    sol.p_due = p_max_due;
    sol.p_cue = cue_at_cap;
  }

  sol.feasible = true;
  sol.outage = outage_probability(sol.p_due, sol.p_cue, ch.alpha_due,
                                  ch.alpha_cue_due, ch.noise_power,
                                  ch.sinr_threshold);
  QueueAnalysis queue = analyze_queue(arrival_rate, slot, sol.outage);
  sol.busy = std::min(queue.busy, 1.0);
  sol.sojourn = queue.mean_sojourn;
  sol.capacity = pair_capacity(sol.p_due, sol.p_cue, ch, sol.busy);
  return sol;
}

}  // namespace v2x
