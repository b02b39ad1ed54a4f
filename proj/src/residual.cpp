#include "nhqm/residual.hpp"

#include <sstream>

#include "nhqm/derivative.hpp"
#include "nhqm/linalg.hpp"

namespace nhqm {

ResidualSeries collect_interior_max(std::vector<double> per_time) {
  ResidualSeries r;
  r.per_time = std::move(per_time);
  const int n = (int)r.per_time.size();
  for (int i = 2; i < n - 2; ++i) r.max_interior = std::max(r.max_interior, r.per_time[i]);
  return r;
}

static void check_same_shape(const OperatorPath& a, const OperatorPath& b,
                             const char* what) {
  if (a.grid.n != b.grid.n || a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": operator paths do not line up");
}

ResidualSeries residual_quasi_hermiticity(const OperatorPath& H, const OperatorPath& rho,
                                          int fd_order) {
  check_same_shape(H, rho, "residual_quasi_hermiticity");
  OperatorPath drho = fd_time_derivative(rho, fd_order);
  std::vector<double> r(H.grid.n);
  for (int i = 0; i < H.grid.n; ++i) {
    Mat lhs = H.ops[i].adjoint() * rho.ops[i] - rho.ops[i] * H.ops[i] - iu * drho.ops[i];
    r[i] = max_abs(lhs);
  }
  return collect_interior_max(std::move(r));
}

static Mat guarded_inverse(const Mat& eta, int time_index, const char* what) {
  double smin = min_singular_value(eta);
  if (smin <= 1e-12) {
    std::ostringstream os;
    os << what << ": map factor is singular at time index " << time_index
       << " (smallest singular value " << smin << ")";
    throw std::domain_error(os.str());
  }
  return eta.partialPivLu().solve(Mat::Identity(eta.rows(), eta.cols()));
}

ResidualSeries residual_dyson(const OperatorPath& h, const OperatorPath& H,
                              const OperatorPath& eta, int fd_order) {
  check_same_shape(h, H, "residual_dyson");
  check_same_shape(h, eta, "residual_dyson");
  OperatorPath deta = fd_time_derivative(eta, fd_order);
  std::vector<double> r(h.grid.n);
  for (int i = 0; i < h.grid.n; ++i) {
    Mat etainv = guarded_inverse(eta.ops[i], i, "residual_dyson");
    Mat rhs = eta.ops[i] * H.ops[i] * etainv + iu * deta.ops[i] * etainv;
    r[i] = max_abs(Mat(h.ops[i] - rhs));
  }
  return collect_interior_max(std::move(r));
}

OperatorPath energy_operator(const OperatorPath& H, const OperatorPath& eta,
                             int fd_order) {
  check_same_shape(H, eta, "energy_operator");
  OperatorPath deta = fd_time_derivative(eta, fd_order);
  OperatorPath out;
  out.grid = H.grid;
  out.ops.resize(H.grid.n);
  for (int i = 0; i < H.grid.n; ++i) {
    Mat etainv = guarded_inverse(eta.ops[i], i, "energy_operator");
    out.ops[i] = H.ops[i] + iu * etainv * deta.ops[i];
  }
  return out;
}

}  // namespace nhqm
