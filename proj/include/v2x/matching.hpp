#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace v2x {

// One-to-one spectrum reuse pattern. `pairs` holds (cue m, due k) sorted by k;
// `objective` is the sum of the matched weights.
struct Assignment {
  std::vector<std::pair<int, int>> pairs;
  double objective = 0.0;
};

// Maximum-weight one-to-one assignment over an M x K weight matrix
// (rows = CUEs, columns = DUEs). Entries of -infinity mark forbidden pairs
// and are excluded from the search outright; rows and columns may stay
// unmatched, so only entries that improve the objective (weight > 0) are ever
// matched. Hungarian method with per-column dummy sinks, O(M^3).
//
// Deterministic tie-breaking: columns are augmented in increasing DUE index
// and path scans visit CUEs in increasing index, so equal-objective optima
// always resolve the same way.
Assignment max_weight_matching(const Eigen::MatrixXd& weights);

}  // namespace v2x
