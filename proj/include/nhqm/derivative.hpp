#pragma once

// Finite-difference time derivatives on uniformly sampled paths.
// Central stencils inside, one-sided stencils of matching order at the ends.

#include "nhqm/types.hpp"

namespace nhqm {

// order 2 needs n >= 3 samples, order 4 needs n >= 5.
OperatorPath fd_time_derivative(const OperatorPath& path, int order = 4);

std::vector<cxd> fd_derivative(const std::vector<cxd>& f, double h, int order = 4);
std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order = 4);

}  // namespace nhqm
