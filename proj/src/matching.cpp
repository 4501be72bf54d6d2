#include "v2x/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace v2x {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Assignment max_weight_matching(const Eigen::MatrixXd& weights) {
  const int num_cues = static_cast<int>(weights.rows());
  const int num_dues = static_cast<int>(weights.cols());
  if (num_cues < 1 || num_dues < 1)
    throw std::invalid_argument("weight matrix must be at least 1x1");
  for (int m = 0; m < num_cues; ++m)
    for (int k = 0; k < num_dues; ++k) {
      double w = weights(m, k);
      if (std::isnan(w) || w == kInf)
        throw std::invalid_argument("weights must be finite or -infinity");
    }

  // Minimization on rows = DUEs, columns = CUEs plus one dummy sink per DUE.
  // cost(k, m) = -w(m, k) for usable pairs (finite, improving), +inf
  // otherwise; cost(k, dummy_k) = 0 models leaving DUE k unmatched. The dummy
  // guarantees every augmentation terminates, so +inf columns are never
  // entered and the duals stay finite.
  const int rows = num_dues;
  const int cols = num_cues + num_dues;
  auto cost = [&](int k, int j) -> double {
    if (j < num_cues) {
      double w = weights(j, k);
      return (std::isfinite(w) && w > 0.0) ? -w : kInf;
    }
    return (j - num_cues == k) ? 0.0 : kInf;
  };

  std::vector<double> row_dual(rows + 1, 0.0);
  std::vector<double> col_dual(cols + 1, 0.0);
  std::vector<int> matched_row(cols + 1, 0);  // column -> row (1-based), 0 = free
  std::vector<int> path_prev(cols + 1, 0);

  for (int row = 1; row <= rows; ++row) {
    matched_row[0] = row;
    int j0 = 0;
    std::vector<double> min_reduced(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      int i0 = matched_row[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - row_dual[i0] - col_dual[j];
        if (cur < min_reduced[j]) {
          min_reduced[j] = cur;
          path_prev[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          row_dual[matched_row[j]] += delta;
          col_dual[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (matched_row[j0] != 0);
    do {
      int j1 = path_prev[j0];
      matched_row[j0] = matched_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  std::vector<std::pair<int, int>> by_due;
  for (int j = 1; j <= num_cues; ++j) {
    int row = matched_row[j];
    if (row == 0) continue;
    int m = j - 1;
    int k = row - 1;
    double w = weights(m, k);
    if (std::isfinite(w) && w > 0.0) {
      by_due.emplace_back(k, m);
      out.objective += w;
    }
  }
  std::sort(by_due.begin(), by_due.end());
  out.pairs.reserve(by_due.size());
  for (auto [k, m] : by_due) out.pairs.emplace_back(m, k);
  return out;
}

}  // namespace v2x
