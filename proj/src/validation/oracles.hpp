#pragma once

// Independent reference implementations used to validate the closed forms.
// Everything here deliberately avoids the library's evaluation paths:
// quadrature instead of series/continued fractions, Monte-Carlo instead of
// closed-form expectations, exhaustive search instead of the Hungarian
// method, bisection instead of the algebraic inverse.

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "v2x/power.hpp"
#include "v2x/rng.hpp"

namespace v2x::validation {

// Adaptive-Simpson quadrature of the defining integral, mapped to a finite
// interval. Relative accuracy around 1e-13.
double scaled_e1_quadrature(double x);
double e1_quadrature(double x);

// First three terms of the large-x asymptotic expansion of e^x E1(x).
double scaled_e1_asymptotic3(double x);

// Truncated series for the moments of the geometric service time.
std::pair<double, double> service_moments_series(double outage, double slot,
                                                 int max_terms);

// Inverts the mean sojourn time in the outage probability by bisection.
double outage_budget_bisection(double arrival_rate, double slot,
                               double latency_bound);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Empirical frequency of the SINR-threshold event over paired exponential
// draws.
McEstimate outage_mc(double p_due, double p_cue, const PairChannel& ch,
                     std::int64_t samples, Rng& rng);

// Empirical mean of the busy-weighted two-term rate, paired exponential
// draws: (1-busy) log2(1+a g) + busy log2(1 + a g / (1 + b g')).
McEstimate mixed_capacity_mc(double mean_snr_cue, double mean_inr_due,
                             double busy_prob, std::int64_t samples, Rng& rng);

// Best capacity over an n x n grid of power pairs inside the boxes that meet
// the outage budget; the busy probability is recomputed per grid point.
double grid_best_capacity(const PairChannel& ch, double outage_budget,
                          double arrival_rate, double slot, double p_max_due,
                          double p_max_cue, int grid_n);

// DUE power whose budget-level CUE power is closest to `p_cue_target`,
// found by scanning [0, p_hi] at the given resolution.
double level_set_grid_search(double p_cue_target, const PairChannel& ch,
                             double outage_budget, double p_hi, double resolution);

// Exact maximum-weight partial assignment by dynamic programming over CUE
// subsets; -infinity entries are unusable. Requires cols such that
// 2^rows fits, i.e. rows <= ~24.
double matching_bruteforce(const Eigen::MatrixXd& weights);

}  // namespace v2x::validation
