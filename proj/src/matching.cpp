#include "nhqm/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nhqm {

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols())
    throw std::invalid_argument("min_cost_assignment: cost matrix must be square");
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  // Potentials-and-augmenting-paths formulation, 1-based with column 0 as the
  // virtual root.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

EigenPaths track_eigenpaths(const OperatorPath& path) {
  const int d = path.dim();
  const int n = path.grid.n;
  EigenPaths out;
  out.values.assign(d, std::vector<cxd>(n));

  Mat prev_vecs;
  std::vector<int> order(d);  // order[k]: eigen index of path k at current sample
  for (int i = 0; i < n; ++i) {
    Eigen::ComplexEigenSolver<Mat> es(path.ops[i]);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("track_eigenpaths: eigensolver failed");
    Mat vecs = es.eigenvectors();
    for (int c = 0; c < d; ++c) vecs.col(c).normalize();
    if (i == 0) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        cxd ea = es.eigenvalues()(a), eb = es.eigenvalues()(b);
        if (ea.real() != eb.real()) return ea.real() < eb.real();
        return ea.imag() < eb.imag();
      });
    } else {
      // cost of sending previous path k to current eigen index l
      Eigen::MatrixXd cost(d, d);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          cost(k, l) = 1.0 - std::abs(cxd(prev_vecs.col(order[k]).adjoint() * vecs.col(l)));
      order = min_cost_assignment(cost);
    }
    for (int k = 0; k < d; ++k) out.values[k][i] = es.eigenvalues()(order[k]);
    prev_vecs = vecs;
  }

  out.drift.assign(d, 0.0);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < n; ++i)
      out.drift[k] = std::max(out.drift[k], std::abs(out.values[k][i] - out.values[k][0]));
    out.max_drift = std::max(out.max_drift, out.drift[k]);
  }
  return out;
}

}  // namespace nhqm
