#include "v2x/allocator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "v2x/parallel.hpp"
#include "v2x/queueing.hpp"

namespace v2x {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

int AllocationResult::matched_due(int m) const {
  for (auto [cue, due] : assignment.pairs)
    if (cue == m) return due;
  return -1;
}

AllocationResult allocate(const ScenarioConfig& config, const LinkGains& gains,
                          const AllocatorOptions& opts) {
  config.validate();
  const int m_count = config.num_cues;
  const int k_count = config.num_dues;
  if (gains.cue_to_bs.size() != m_count || gains.due_direct.size() != k_count ||
      gains.due_to_bs.size() != k_count ||
      gains.cue_to_due.rows() != m_count || gains.cue_to_due.cols() != k_count)
    throw std::invalid_argument("link gains do not match the scenario dimensions");

  AllocationResult result;
  result.outage_budgets.assign(k_count, kNan);
  result.due_sojourn.assign(k_count, kNan);
  result.cue_capacity.assign(m_count, 0.0);

  for (int k = 0; k < k_count; ++k) {
    if (opts.mode == BudgetMode::fixed_outage) {
      double p0 = opts.fixed_outage_threshold;
      if (!(p0 > 0.0 && p0 < 1.0))
        throw std::invalid_argument("fixed outage threshold must lie in (0, 1)");
      result.outage_budgets[k] = p0;
    } else {
      auto budget = latency_to_outage_budget(config.arrival_rate(k),
                                             config.slot_length,
                                             config.latency_bound);
      if (budget)
        result.outage_budgets[k] = *budget;
      else
        result.infeasible_dues.push_back(k);
    }
  }

  // Pair power optima are independent; solve them data-parallel.
  result.per_pair.assign(static_cast<std::size_t>(m_count) * k_count, PairSolution{});
  parallel_for(
      result.per_pair.size(),
      [&](std::size_t idx) {
        int m = static_cast<int>(idx) / k_count;
        int k = static_cast<int>(idx) % k_count;
        double budget = result.outage_budgets[k];
        if (std::isnan(budget)) return;  // DUE excluded outright
        result.per_pair[idx] = optimal_pair_powers(
            pair_channel(config, gains, m, k), budget, config.arrival_rate(k),
            config.slot_length, config.max_power_due, config.max_power_cue);
      },
      opts.workers);

  result.weights = Eigen::MatrixXd::Constant(m_count, k_count, kNegInf);
  for (int m = 0; m < m_count; ++m)
    for (int k = 0; k < k_count; ++k) {
      const PairSolution& sol = result.pair(m, k);
      if (sol.feasible && sol.capacity >= config.capacity_floor)
        result.weights(m, k) = sol.capacity;
    }

  result.assignment = max_weight_matching(result.weights);

  std::vector<char> due_matched(k_count, 0);
  for (auto [m, k] : result.assignment.pairs) {
    due_matched[k] = 1;
    const PairSolution& sol = result.pair(m, k);
    result.due_sojourn[k] = sol.sojourn;
    result.cue_capacity[m] = sol.capacity;
  }
  std::vector<char> due_infeasible(k_count, 0);
  for (int k : result.infeasible_dues) due_infeasible[k] = 1;
  for (int k = 0; k < k_count; ++k)
    if (!due_matched[k] && !due_infeasible[k]) result.unmatched_dues.push_back(k);

  for (int m = 0; m < m_count; ++m) {
    if (result.matched_due(m) >= 0) continue;
    result.cue_capacity[m] = capacity_no_interference(
        config.max_power_cue, gains.cue_to_bs[m], config.noise_power);
  }

  result.sum_capacity = 0.0;
  for (double c : result.cue_capacity) result.sum_capacity += c;

  if (!result.infeasible_dues.empty())
    result.status = AllocationStatus::infeasible;
  else if (!result.unmatched_dues.empty())
    result.status = AllocationStatus::partial;
  else
    result.status = AllocationStatus::complete;
  return result;
}

double total_objective(const AllocationResult& result, const LinkGains& gains,
                       const ScenarioConfig& config) {
  double total = 0.0;
  std::vector<char> cue_matched(config.num_cues, 0);
  for (auto [m, k] : result.assignment.pairs) {
    cue_matched[m] = 1;
    const PairSolution& sol = result.pair(m, k);
    total += pair_capacity(sol.p_due, sol.p_cue,
                           pair_channel(config, gains, m, k), sol.busy);
  }
  for (int m = 0; m < config.num_cues; ++m)
    if (!cue_matched[m])
      total += capacity_no_interference(config.max_power_cue,
                                        gains.cue_to_bs[m], config.noise_power);
  return total;
}

}  // namespace v2x
