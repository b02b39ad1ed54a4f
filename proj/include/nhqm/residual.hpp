#pragma once

// Defining-equation residuals. These are the primary correctness instruments:
// every map the library emits is pushed back through its defining relation
// and the violation is measured in the entrywise sup norm.

#include "nhqm/types.hpp"

namespace nhqm {

struct ResidualSeries {
  std::vector<double> per_time;
  // Largest residual once the two outermost samples on each side are dropped
  // (the one-sided end stencils carry a larger error constant).
  double max_interior = 0.0;
};

ResidualSeries collect_interior_max(std::vector<double> per_time);

// || H^dag rho - rho H - i d rho/dt ||_max per sample.
ResidualSeries residual_quasi_hermiticity(const OperatorPath& H, const OperatorPath& rho,
                                          int fd_order = 4);

// || h - eta H eta^-1 - i (d eta/dt) eta^-1 ||_max per sample. Near-singular
// eta (smallest singular value <= 1e-12) is rejected with the time index.
ResidualSeries residual_dyson(const OperatorPath& h, const OperatorPath& H,
                              const OperatorPath& eta, int fd_order = 4);

// Energy operator H + i eta^-1 (d eta/dt); same singularity guard.
OperatorPath energy_operator(const OperatorPath& H, const OperatorPath& eta,
                             int fd_order = 4);

}  // namespace nhqm
