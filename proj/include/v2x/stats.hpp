#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace v2x {

inline double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double sample_std(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

// Two-sided 95% Student-t quantile for small sample sizes, normal beyond.
inline double t_quantile_975(std::size_t df) {
  static const double table[] = {
      0.0,    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262,
      2.228,  2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093,
      2.086,  2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045,
      2.042};
  if (df == 0) return 0.0;
  if (df <= 30) return table[df];
  return 1.960;
}

// Half-width of the 95% confidence interval of the mean across replicates.
inline double ci_halfwidth(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  return t_quantile_975(xs.size() - 1) * sample_std(xs) /
         std::sqrt(static_cast<double>(xs.size()));
}

// Upper 1% chi-square critical value via the Wilson-Hilferty approximation;
// accurate to a fraction of a percent for df >= 1.
inline double chi_square_critical_99(std::size_t df) {
  double d = static_cast<double>(df);
  double z = 2.3263478740408408;  // standard normal 99% quantile
  double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
  return d * t * t * t;
}

}  // namespace v2x
