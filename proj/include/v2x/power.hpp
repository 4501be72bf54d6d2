#pragma once

#include <limits>
#include <optional>

namespace v2x {

// Large-scale view of one candidate spectrum-reuse pair: the CUE uplink, the
// DUE direct link, and the two crosstalk links.
struct PairChannel {
  double alpha_cue_bs;   // CUE transmitter -> base station
  double alpha_due;      // DUE transmitter -> DUE receiver
  double alpha_due_bs;   // DUE transmitter -> base station (interferes uplink)
  double alpha_cue_due;  // CUE transmitter -> DUE receiver (interferes DUE)
  double noise_power;    // watts
  double sinr_threshold; // linear
};

// Optimal operating point of one pair. `busy` is clamped to [0, 1]; an
// unstable queue transmits every slot. When infeasible (the outage budget is
// unattainable even without CUE interference) powers and capacity are zero.
struct PairSolution {
  double p_due = 0.0;
  double p_cue = 0.0;
  double outage = 1.0;
  double busy = 0.0;
  double capacity = 0.0;  // bits/s/Hz for the CUE
  double sojourn = std::numeric_limits<double>::infinity();  // seconds
  bool feasible = false;
};

// Largest CUE power that keeps the DUE at exactly the outage budget for the
// given DUE power. Negative when the DUE power is too small to meet the
// budget even without interference. Strictly increasing on its positive
// branch.
double outage_level_cue_power(double p_due, const PairChannel& ch,
                              double outage_budget);

// Inverse of the above on the positive branch: the DUE power whose budget-
// level CUE power equals `p_cue_target`. Bisection with relative tolerance
// 1e-10, bracket grown from `bracket_hint` by doubling; empty if no solution
// is found below the bracket cap. The returned power errs on the large side
// so the achieved outage never exceeds the budget.
std::optional<double> outage_level_due_power(double p_cue_target,
                                             const PairChannel& ch,
                                             double outage_budget,
                                             double bracket_hint);

// Ergodic capacity of a Rayleigh-faded link with mean SNR p_cue *
// alpha_cue_bs / noise, no interference. bits/s/Hz.
double capacity_no_interference(double p_cue, double alpha_cue_bs,
                                double noise_power);

// Ergodic capacity of the CUE when its band is reused by a DUE that is busy
// a fraction `busy_prob` of the slots. bits/s/Hz.
double pair_capacity(double p_due, double p_cue, const PairChannel& ch,
                     double busy_prob);

// Capacity-optimal transmit powers for one candidate pair subject to the
// DUE's outage budget and both power boxes. At a feasible optimum at least
// one power sits at its box edge and the outage constraint is tight.
PairSolution optimal_pair_powers(const PairChannel& ch, double outage_budget,
                                 double arrival_rate, double slot,
                                 double p_max_due, double p_max_cue);

}  // namespace v2x
