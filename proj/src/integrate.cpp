#include "nhqm/integrate.hpp"

#include <cmath>

namespace nhqm {

namespace {

template <class V>
std::vector<V> cumsimp(const std::vector<V>& f, double h) {
  const int n = (int)f.size();
  if (n < 4) throw std::invalid_argument("cumulative_simpson: need >= 4 samples");
  std::vector<V> I(n);
  I[0] = V{};
  // Cubic sub-panel rules (the closed Newton-Cotes family Simpson belongs
  // to) so every cumulative node is fourth order, not just the even ones.
  auto fwd = [&](int i) {  // integral over [i, i+1] from nodes i-1..i+2? no: i..i+3
    return (9.0 * f[i] + 19.0 * f[i + 1] - 5.0 * f[i + 2] + f[i + 3]) * (h / 24.0);
  };
  auto bwd = [&](int i) {  // integral over [i, i+1] from nodes i-2..i+1
    return (f[i - 2] - 5.0 * f[i - 1] + 19.0 * f[i] + 9.0 * f[i + 1]) * (h / 24.0);
  };
  for (int i = 0; i + 1 < n; ++i) {
    if (i + 3 < n)
      I[i + 1] = I[i] + fwd(i);
    else
      I[i + 1] = I[i] + bwd(i);
  }
  return I;
}

}  // namespace

std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
  return cumsimp(f, h);
}
std::vector<cxd> cumulative_simpson(const std::vector<cxd>& f, double h) {
  return cumsimp(f, h);
}

std::vector<Eigen::VectorXd> rk4(
    const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& y0, const TimeGrid& grid, int substeps) {
  if (substeps < 1) throw std::invalid_argument("rk4: substeps must be positive");
  std::vector<Eigen::VectorXd> out;
  out.reserve(grid.n);
  Eigen::VectorXd y = y0;
  out.push_back(y);
  const double hh = grid.h() / substeps;
  for (int i = 0; i + 1 < grid.n; ++i) {
    double t = grid.t(i);
    for (int s = 0; s < substeps; ++s) {
      Eigen::VectorXd k1 = f(t, y);
      Eigen::VectorXd k2 = f(t + hh / 2, y + (hh / 2) * k1);
      Eigen::VectorXd k3 = f(t + hh / 2, y + (hh / 2) * k2);
      Eigen::VectorXd k4 = f(t + hh, y + hh * k3);
      y += (hh / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
      t += hh;
    }
    out.push_back(y);
  }
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
constexpr double a21 = 1. / 5;
constexpr double a31 = 3. / 40, a32 = 9. / 40;
constexpr double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
constexpr double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                 a54 = -212. / 729;
constexpr double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                 a64 = 49. / 176, a65 = -5103. / 18656;
constexpr double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192, b5 = -2187. / 6784,
                 b6 = 11. / 84;
constexpr double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920,
                 e5 = -17253. / 339200, e6 = 22. / 525, e7 = -1. / 40;

template <class VecT>
std::vector<VecT> rk45_impl(const std::function<VecT(double, const VecT&)>& f,
                            const VecT& y0, const TimeGrid& grid, double rtol,
                            double atol) {
  std::vector<VecT> out;
  out.reserve(grid.n);
  VecT y = y0;
  out.push_back(y);
  VecT k1 = f(grid.t0, y);
  double dt = grid.h();

  auto err_norm = [&](const VecT& e, const VecT& ya, const VecT& yb) {
    double m = 0.0;
    for (int i = 0; i < e.size(); ++i) {
      double sc = atol + rtol * std::max(std::abs(ya(i)), std::abs(yb(i)));
      m = std::max(m, std::abs(e(i)) / sc);
    }
    return m;
  };

  for (int seg = 0; seg + 1 < grid.n; ++seg) {
    double t = grid.t(seg);
    const double t_end = grid.t(seg + 1);
    while (t < t_end - 1e-14 * std::abs(t_end)) {
      bool clipped = false;
      double step = dt;
      if (t + step >= t_end) {
        step = t_end - t;
        clipped = true;
      }
      VecT k2 = f(t + c2 * step, y + step * (a21 * k1));
      VecT k3 = f(t + c3 * step, y + step * (a31 * k1 + a32 * k2));
      VecT k4 = f(t + c4 * step, y + step * (a41 * k1 + a42 * k2 + a43 * k3));
      VecT k5 = f(t + c5 * step, y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      VecT k6 = f(t + step, y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      VecT ynew = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      VecT k7 = f(t + step, ynew);
      VecT err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      double en = err_norm(err, y, ynew);
      if (en <= 1.0) {
        t += step;
        y = ynew;
        k1 = k7;  // FSAL
      }
      double fac = en > 0 ? 0.9 * std::pow(en, -0.2) : 5.0;
      fac = std::clamp(fac, 0.2, 5.0);
      if (!clipped || en > 1.0) dt = step * fac;
      if (dt < 1e-14 * std::max(1.0, std::abs(t)))
        throw std::runtime_error("rk45: step size underflow");
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace

std::vector<Eigen::VectorXd> rk45(
    const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& y0, const TimeGrid& grid, double rtol, double atol) {
  return rk45_impl<Eigen::VectorXd>(f, y0, grid, rtol, atol);
}

std::vector<Eigen::VectorXcd> rk45c(
    const std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>& f,
    const Eigen::VectorXcd& y0, const TimeGrid& grid, double rtol, double atol) {
  return rk45_impl<Eigen::VectorXcd>(f, y0, grid, rtol, atol);
}

}  // namespace nhqm
