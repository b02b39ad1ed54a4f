#include "nhqm/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nhqm {

ThetaGrid::ThetaGrid(int m_) : m(m_) {
  if (m < 8 || m % 2 != 0)
    throw std::invalid_argument("ThetaGrid: point count must be even and >= 8");
}

Mat periodic_derivative(const ThetaGrid& g) {
  int m = g.m;
  double h = g.h();
  Mat d = Mat::Zero(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      if (j == k) continue;
      int diff = j - k;
      double sgn = (diff % 2 == 0) ? 1.0 : -1.0;
      d(j, k) = 0.5 * sgn / std::tan(0.5 * diff * h);
    }
  return d;
}

Mat angular_momentum(const ThetaGrid& g) { return -iu * periodic_derivative(g); }

Mat diagonal_of(const ThetaGrid& g, const std::function<cxd(double)>& f) {
  Mat d = Mat::Zero(g.m, g.m);
  for (int j = 0; j < g.m; ++j) d(j, j) = f(g.theta(j));
  return d;
}

Mat index_permutation(int m, const std::function<int(int)>& sigma) {
  Mat p = Mat::Zero(m, m);
  std::vector<char> hit(m, 0);
  for (int j = 0; j < m; ++j) {
    int t = sigma(j);
    if (t < 0 || t >= m || hit[t])
      throw std::invalid_argument("index_permutation: sigma is not a bijection");
    hit[t] = 1;
    p(j, t) = 1.0;
  }
  return p;
}

cxd periodic_integral(const ThetaGrid& g, const Vec& samples) {
  if (samples.size() != g.m)
    throw std::invalid_argument("periodic_integral: sample count mismatch");
  return samples.sum() * g.h();
}

}  // namespace nhqm
