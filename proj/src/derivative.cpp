#include "nhqm/derivative.hpp"

namespace nhqm {

namespace {

// Stencil rows as (offset, weight/h) pairs resolved per sample index.
template <class V>
std::vector<V> apply_stencils(const std::vector<V>& f, double h, int order) {
  const int n = (int)f.size();
  std::vector<V> d(n);
  auto at = [&](int i, std::initializer_list<double> w, int first_offset) {
    V acc = f[i + first_offset] * (*w.begin() / h);
    int k = first_offset + 1;
    for (auto it = w.begin() + 1; it != w.end(); ++it, ++k) acc += f[i + k] * (*it / h);
    return acc;
  };

  if (order == 2) {
    if (n < 3) throw std::invalid_argument("fd derivative: order 2 needs >= 3 samples");
    d[0] = at(0, {-1.5, 2.0, -0.5}, 0);
    for (int i = 1; i < n - 1; ++i) d[i] = at(i, {-0.5, 0.0, 0.5}, -1);
    d[n - 1] = at(n - 1, {0.5, -2.0, 1.5}, -2);
    return d;
  }
  if (order == 4) {
    if (n < 5) throw std::invalid_argument("fd derivative: order 4 needs >= 5 samples");
    d[0] = at(0, {-25. / 12, 4.0, -3.0, 4. / 3, -0.25}, 0);
    d[1] = at(1, {-0.25, -5. / 6, 1.5, -0.5, 1. / 12}, -1);
    for (int i = 2; i < n - 2; ++i)
      d[i] = at(i, {1. / 12, -2. / 3, 0.0, 2. / 3, -1. / 12}, -2);
    d[n - 2] = at(n - 2, {-1. / 12, 0.5, -1.5, 5. / 6, 0.25}, -3);
    d[n - 1] = at(n - 1, {0.25, -4. / 3, 3.0, -4.0, 25. / 12}, -4);
    return d;
  }
  throw std::invalid_argument("fd derivative: order must be 2 or 4");
}

}  // namespace

OperatorPath fd_time_derivative(const OperatorPath& path, int order) {
  OperatorPath out;
  out.grid = path.grid;
  out.ops = apply_stencils(path.ops, path.grid.h(), order);
  return out;
}

std::vector<cxd> fd_derivative(const std::vector<cxd>& f, double h, int order) {
  return apply_stencils(f, h, order);
}

std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order) {
  return apply_stencils(f, h, order);
}

}  // namespace nhqm
