#pragma once

#include <optional>

namespace v2x {

// First and second moments of the per-packet service time (transmission plus
// retransmissions), in seconds and seconds^2.
struct ServiceMoments {
  double mean;
  double second;
};

// Closed-form summary of one transmitter queue. `busy` is the raw utilization
// lambda*T/(1-q) and may reach or exceed 1 for an unstable queue, in which
// case `mean_sojourn` is +infinity and `stable` is false.
struct QueueAnalysis {
  double outage;
  double busy;
  double mean_service;
  double second_moment_service;
  double mean_sojourn;
  bool stable;
};

// Per-slot probability that the receiver fails to decode: the SINR of a
// Rayleigh-faded link with transmit power p_due, direct gain alpha_due,
// interferer power p_cue over gain alpha_cross, noise power sigma2, falls
// below the detection threshold. Returns 1 when p_due == 0.
double outage_probability(double p_due, double p_cue, double alpha_due,
                          double alpha_cross, double noise_power,
                          double sinr_threshold);

// Geometric retransmission service: mean T/(1-q), second moment
// T^2 (1+q)/(1-q)^2.
ServiceMoments service_moments(double outage, double slot);

// Utilization lambda*T/(1-q). Values >= 1 mean the queue is unstable; that is
// reported, not thrown.
double busy_probability(double arrival_rate, double slot, double outage);

// Mean packet sojourn time (queueing wait plus service) of the slotted queue
// with one-slot server vacations. Throws std::domain_error when the queue is
// unstable (outage >= 1 - lambda*T).
double mean_sojourn_time(double arrival_rate, double slot, double outage);

// Infimum of the mean sojourn time over outage in [0, 1-lambda*T): the value
// at outage = 0.
double min_sojourn_time(double arrival_rate, double slot);

// Largest per-slot outage probability under which the mean sojourn time still
// meets `latency_bound`. Empty when the bound is unattainable even with
// outage 0. A returned budget q satisfies 0 < q < 1 - lambda*T and
// mean_sojourn_time(lambda, T, q) == latency_bound.
std::optional<double> latency_to_outage_budget(double arrival_rate, double slot,
                                               double latency_bound);

// Non-throwing bundle of the above for reporting; unstable queues get
// mean_sojourn = +infinity.
QueueAnalysis analyze_queue(double arrival_rate, double slot, double outage);

}  // namespace v2x
