#include "validation/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "v2x/queueing.hpp"

namespace v2x::validation {

namespace {

double simpson(double (*f)(double, double), double p, double a, double b) {
  double c = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a, p) + 4.0 * f(c, p) + f(b, p));
}

double adaptive_simpson(double (*f)(double, double), double p, double a, double b,
                        double whole, double tol, int depth) {
  double c = 0.5 * (a + b);
  double left = simpson(f, p, a, c);
  double right = simpson(f, p, c, b);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, p, a, c, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, p, c, b, right, tol / 2.0, depth - 1);
}

// e^x E1(x) = integral over s in [0, inf) of e^-s / (x + s), mapped to
// u in [0, 1) by s = u / (1 - u).
double scaled_e1_integrand(double u, double x) {
  if (u >= 1.0) return 0.0;
  double one_minus = 1.0 - u;
  double s = u / one_minus;
  return std::exp(-s) / ((x + s) * one_minus * one_minus);
}

}  // namespace

double scaled_e1_quadrature(double x) {
  if (!(x > 0.0)) throw std::domain_error("quadrature oracle requires x > 0");
  // Absolute tolerance scaled to the result's magnitude (~1/x for large x).
  double scale = x < 1.0 ? 1.0 - std::log(x) : 1.0 / x;
  double tol = 1e-14 * scale;
  double a = 0.0, m = 0.5, b = 1.0 - 1e-16;
  double left = adaptive_simpson(scaled_e1_integrand, x, a, m,
                                 simpson(scaled_e1_integrand, x, a, m), tol, 48);
  double right = adaptive_simpson(scaled_e1_integrand, x, m, b,
                                  simpson(scaled_e1_integrand, x, m, b), tol, 48);
  return left + right;
}

double e1_quadrature(double x) { return std::exp(-x) * scaled_e1_quadrature(x); }

double scaled_e1_asymptotic3(double x) {
  return 1.0 / x - 1.0 / (x * x) + 2.0 / (x * x * x);
}

std::pair<double, double> service_moments_series(double outage, double slot,
                                                 int max_terms) {
  double first = 0.0;
  double second = 0.0;
  double weight = 1.0 - outage;  // Pr{attempts = j} = q^{j-1} (1 - q)
  for (int j = 1; j <= max_terms; ++j) {
    double y = static_cast<double>(j) * slot;
    first += y * weight;
    second += y * y * weight;
    weight *= outage;
    if (weight < 1e-320) break;
  }
  return {first, second};
}

double outage_budget_bisection(double arrival_rate, double slot,
                               double latency_bound) {
  double cap = 1.0 - arrival_rate * slot;
  if (mean_sojourn_time(arrival_rate, slot, 0.0) > latency_bound)
    throw std::domain_error("latency bound unattainable in bisection oracle");
  double lo = 0.0;
  double hi = cap;
  for (int i = 0; i < 200 && (hi - lo) > 1e-16; ++i) {
    double mid = 0.5 * (lo + hi);
    double mu = mid >= cap ? std::numeric_limits<double>::infinity()
                           : mean_sojourn_time(arrival_rate, slot, mid);
    if (mu < latency_bound)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

McEstimate outage_mc(double p_due, double p_cue, const PairChannel& ch,
                     std::int64_t samples, Rng& rng) {
  const double signal = p_due * ch.alpha_due;
  const double cross = p_cue * ch.alpha_cue_due;
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    double num = signal * rng.exponential();
    double den = ch.noise_power + cross * rng.exponential();
    if (num < ch.sinr_threshold * den) ++hits;
  }
  McEstimate est;
  est.mean = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_error =
      std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(samples));
  return est;
}

McEstimate mixed_capacity_mc(double mean_snr_cue, double mean_inr_due,
                             double busy_prob, std::int64_t samples, Rng& rng) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    double g = rng.exponential();
    double g_interf = rng.exponential();
    double clean = std::log2(1.0 + mean_snr_cue * g);
    double hit =
        std::log2(1.0 + mean_snr_cue * g / (1.0 + mean_inr_due * g_interf));
    double v = (1.0 - busy_prob) * clean + busy_prob * hit;
    sum += v;
    sum_sq += v * v;
  }
  double n = static_cast<double>(samples);
  McEstimate est;
  est.mean = sum / n;
  double var = (sum_sq - sum * sum / n) / (n - 1.0);
  est.std_error = std::sqrt(std::max(var, 0.0) / n);
  return est;
}

double grid_best_capacity(const PairChannel& ch, double outage_budget,
                          double arrival_rate, double slot, double p_max_due,
                          double p_max_cue, int grid_n) {
  double best = 0.0;
  for (int i = 1; i <= grid_n; ++i) {
    double p_due = p_max_due * static_cast<double>(i) / grid_n;
    for (int j = 1; j <= grid_n; ++j) {
      double p_cue = p_max_cue * static_cast<double>(j) / grid_n;
      double q = outage_probability(p_due, p_cue, ch.alpha_due, ch.alpha_cue_due,
                                    ch.noise_power, ch.sinr_threshold);
      if (q > outage_budget) continue;
      double busy = std::min(busy_probability(arrival_rate, slot, q), 1.0);
      best = std::max(best, pair_capacity(p_due, p_cue, ch, busy));
    }
  }
  return best;
}

double level_set_grid_search(double p_cue_target, const PairChannel& ch,
                             double outage_budget, double p_hi, double resolution) {
  double best_p = 0.0;
  double best_err = std::numeric_limits<double>::infinity();
  for (double p = resolution; p <= p_hi; p += resolution) {
    double err =
        std::fabs(outage_level_cue_power(p, ch, outage_budget) - p_cue_target);
    if (err < best_err) {
      best_err = err;
      best_p = p;
    }
  }
  return best_p;
}

double matching_bruteforce(const Eigen::MatrixXd& weights) {
  const int m_count = static_cast<int>(weights.rows());
  const int k_count = static_cast<int>(weights.cols());
  if (m_count > 24)
    throw std::invalid_argument("bruteforce oracle limited to 24 rows");
  const std::size_t masks = std::size_t{1} << m_count;
  // best[mask]: max total over partial assignments of the DUEs processed so
  // far whose used CUEs are exactly `mask`; final answer scans every mask.
  std::vector<double> best(masks, 0.0);
  for (int k = 0; k < k_count; ++k) {
    std::vector<double> next = best;  // DUE k left unmatched
    for (std::size_t mask = 0; mask < masks; ++mask) {
      for (int m = 0; m < m_count; ++m) {
        if (mask & (std::size_t{1} << m)) continue;
        double w = weights(m, k);
        if (!std::isfinite(w)) continue;
        std::size_t with = mask | (std::size_t{1} << m);
        double candidate = best[mask] + w;
        if (candidate > next[with]) next[with] = candidate;
      }
    }
    best = std::move(next);
  }
  double out = 0.0;
  for (double v : best) out = std::max(out, v);
  return out;
}

}  // namespace v2x::validation
