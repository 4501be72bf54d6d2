#include "v2x/queueing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace v2x {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

void check_rate_slot(double arrival_rate, double slot) {
  require(std::isfinite(arrival_rate) && arrival_rate >= 0.0,
          "arrival rate must be finite and non-negative");
  require(std::isfinite(slot) && slot > 0.0, "slot length must be positive");
  require(arrival_rate * slot < 1.0, "arrival rate times slot must be below 1");
}

}  // namespace

double outage_probability(double p_due, double p_cue, double alpha_due,
                          double alpha_cross, double noise_power,
                          double sinr_threshold) {
  require(std::isfinite(p_due) && p_due >= 0.0, "DUE power must be >= 0");
  require(std::isfinite(p_cue) && p_cue >= 0.0, "CUE power must be >= 0");
  require(std::isfinite(alpha_due) && alpha_due > 0.0, "direct gain must be > 0");
  require(std::isfinite(alpha_cross) && alpha_cross > 0.0, "cross gain must be > 0");
  require(std::isfinite(noise_power) && noise_power >= 0.0, "noise power must be >= 0");
  require(std::isfinite(sinr_threshold) && sinr_threshold > 0.0,
          "SINR threshold must be > 0");

  if (p_due == 0.0) return 1.0;
  double signal = p_due * alpha_due;
  double q = 1.0 - signal * std::exp(-sinr_threshold * noise_power / signal) /
                       (signal + sinr_threshold * p_cue * alpha_cross);
  // Guard rounding at the extremes.
  if (q < 0.0) return 0.0;
  if (q > 1.0) return 1.0;
  return q;
}

ServiceMoments service_moments(double outage, double slot) {
  require(std::isfinite(outage) && outage >= 0.0 && outage < 1.0,
          "outage probability must lie in [0, 1)");
  require(std::isfinite(slot) && slot > 0.0, "slot length must be positive");
  double fail = 1.0 - outage;
  return {slot / fail, slot * slot * (1.0 + outage) / (fail * fail)};
}

double busy_probability(double arrival_rate, double slot, double outage) {
  check_rate_slot(arrival_rate, slot);
  require(std::isfinite(outage) && outage >= 0.0 && outage < 1.0,
          "outage probability must lie in [0, 1)");
  return arrival_rate * slot / (1.0 - outage);
}

double mean_sojourn_time(double arrival_rate, double slot, double outage) {
  check_rate_slot(arrival_rate, slot);
  require(std::isfinite(outage) && outage >= 0.0 && outage < 1.0,
          "outage probability must lie in [0, 1)");
  double slack = 1.0 - outage - arrival_rate * slot;
  require(slack > 0.0, "unstable: outage >= 1 - lambda*T");
  return slot / 2.0 + slot / (1.0 - outage) +
         arrival_rate * slot * slot * (1.0 + outage) /
             (2.0 * (1.0 - outage) * slack);
}

double min_sojourn_time(double arrival_rate, double slot) {
  check_rate_slot(arrival_rate, slot);
  double load = arrival_rate * slot;
  return slot * (3.0 - 2.0 * load) / (2.0 * (1.0 - load));
}

std::optional<double> latency_to_outage_budget(double arrival_rate, double slot,
                                               double latency_bound) {
  check_rate_slot(arrival_rate, slot);
  require(std::isfinite(latency_bound) && latency_bound > 0.0,
          "latency bound must be positive");
  if (latency_bound <= min_sojourn_time(arrival_rate, slot)) return std::nullopt;
  double budget =
      (2.0 * arrival_rate * slot * slot -
       (2.0 * arrival_rate * latency_bound + 3.0) * slot + 2.0 * latency_bound) /
      (2.0 * latency_bound - slot);
  return budget;
}

QueueAnalysis analyze_queue(double arrival_rate, double slot, double outage) {
  check_rate_slot(arrival_rate, slot);
  require(std::isfinite(outage) && outage >= 0.0 && outage < 1.0,
          "outage probability must lie in [0, 1)");
  QueueAnalysis out;
  out.outage = outage;
  ServiceMoments moments = service_moments(outage, slot);
  out.mean_service = moments.mean;
  out.second_moment_service = moments.second;
  out.busy = busy_probability(arrival_rate, slot, outage);
  out.stable = out.busy < 1.0;
  out.mean_sojourn = out.stable ? mean_sojourn_time(arrival_rate, slot, outage)
                                : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace v2x
