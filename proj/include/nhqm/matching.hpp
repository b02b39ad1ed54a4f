#pragma once

#include <vector>

#include "nhqm/types.hpp"

namespace nhqm {

// Minimum-cost assignment on a square cost matrix (Hungarian, O(n^3)).
// Returns the matched column for each row.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

struct EigenPaths {
  // values[k][i] is path k at time sample i; paths are chained between
  // neighbouring samples by maximal eigenvector overlap, so each stays on one
  // spectral branch through crossings.
  std::vector<std::vector<cxd>> values;
  std::vector<double> drift;  // max_t |value_k(t) - value_k(0)|
  double max_drift = 0.0;
};

EigenPaths track_eigenpaths(const OperatorPath& path);

}  // namespace nhqm
