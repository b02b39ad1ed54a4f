#include "nhqm/ermakov.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nhqm/integrate.hpp"

namespace nhqm {

namespace {

// Order-6 central stencils. Certification works at h ~ 1e-2 where the
// stencil roundoff floor |f| eps/h^2 sits near 1e-11; a lower order would
// need a finer grid and run into that floor from the truncation side.
// The three samples at each end are left at zero; only interior values
// feed the certification.
std::vector<double> first_derivative(const std::vector<double>& f, double h) {
  int n = int(f.size());
  if (n < 7) throw std::invalid_argument("first_derivative: need >= 7 samples");
  std::vector<double> out(n, 0.0);
  for (int i = 3; i < n - 3; ++i)
    out[i] = (-f[i - 3] + 9 * f[i - 2] - 45 * f[i - 1] + 45 * f[i + 1] - 9 * f[i + 2] +
              f[i + 3]) /
             (60 * h);
  return out;
}

std::vector<double> second_derivative(const std::vector<double>& f, double h) {
  int n = int(f.size());
  if (n < 7) throw std::invalid_argument("second_derivative: need >= 7 samples");
  std::vector<double> out(n, 0.0);
  double h2 = h * h;
  for (int i = 3; i < n - 3; ++i)
    out[i] = (2 * f[i - 3] - 27 * f[i - 2] + 270 * f[i - 1] - 490 * f[i] +
              270 * f[i + 1] - 27 * f[i + 2] + 2 * f[i + 3]) /
             (180 * h2);
  return out;
}

double interior_max(const std::vector<double>& r) {
  double m = 0.0;
  for (int i = 3; i + 3 < int(r.size()); ++i) m = std::max(m, std::abs(r[i]));
  return m;
}

void check_positive(const std::vector<double>& s2, const TimeGrid& grid,
                    const char* who) {
  for (int i = 0; i < grid.n; ++i) {
    if (!(s2[i] > 0.0)) {
      std::ostringstream msg;
      msg << who << ": sigma^2 = " << s2[i] << " at t = " << grid.t(i);
      throw std::domain_error(msg.str());
    }
  }
}

std::vector<double> sample(const std::function<double(double)>& f,
                           const TimeGrid& grid) {
  std::vector<double> out(grid.n);
  for (int i = 0; i < grid.n; ++i) out[i] = f(grid.t(i));
  return out;
}

EPSolution numeric_common(const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& rhs,
                          const TimeGrid& grid, double s0, double sdot0,
                          const char* who) {
  if (!(s0 > 0.0)) throw std::domain_error(std::string(who) + ": sigma(t0) must be positive");
  Eigen::VectorXd y0(2);
  y0 << s0, sdot0;
  std::vector<Eigen::VectorXd> y = rk45(rhs, y0, grid, 1e-10, 1e-12);
  EPSolution sol;
  sol.grid = grid;
  sol.sigma.resize(grid.n);
  sol.sigma_dot.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    double s = y[i](0);
    if (!std::isfinite(s) || s < 1e-8) {
      std::ostringstream msg;
      msg << who << ": sigma " << (std::isfinite(s) ? "reached zero" : "blew up")
          << " near t = " << grid.t(i);
      throw std::runtime_error(msg.str());
    }
    sol.sigma[i] = s;
    sol.sigma_dot[i] = y[i](1);
  }
  return sol;
}

}  // namespace

double ep_residual(const StandardEP& problem, const TimeGrid& grid,
                   const std::vector<double>& sigma) {
  std::vector<double> sdd = second_derivative(sigma, grid.h());
  std::vector<double> r(grid.n, 0.0);
  for (int i = 3; i < grid.n - 3; ++i) {
    double s = sigma[i];
    r[i] = sdd[i] + problem.lambda(grid.t(i)) * s - problem.k / (s * s * s);
  }
  return interior_max(r);
}

double ep_residual(const DissipativeEP& problem, const TimeGrid& grid,
                   const std::vector<double>& sigma) {
  std::vector<double> sd = first_derivative(sigma, grid.h());
  std::vector<double> sdd = second_derivative(sigma, grid.h());
  std::vector<double> r(grid.n, 0.0);
  for (int i = 3; i < grid.n - 3; ++i) {
    Jet4d kap = problem.kappa.jet(grid.t(i));
    double ka = kap.deriv(0), kd = kap.deriv(1);
    double k3 = ka * ka * ka;
    double s = sigma[i];
    r[i] = ka * sdd[i] - kd * sd[i] + 0.25 * problem.omega2 * k3 * s -
           0.25 * problem.k * k3 / (s * s * s);
  }
  return interior_max(r);
}

double ep_residual(const MassWeightedEP& problem, const TimeGrid& grid,
                   const std::vector<double>& sigma) {
  std::vector<double> sd = first_derivative(sigma, grid.h());
  std::vector<double> sdd = second_derivative(sigma, grid.h());
  std::vector<double> m(grid.n), md(grid.n);
  double m_max = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    Jet4d mj = problem.mass(grid.t(i));
    m[i] = mj.deriv(0);
    md[i] = mj.deriv(1);
    m_max = std::max(m_max, m[i]);
  }
  std::vector<double> r(grid.n, 0.0);
  for (int i = 3; i < grid.n - 3; ++i) {
    if (m[i] < 1e-6 * m_max) continue;  // equation is singular where m vanishes
    double s = sigma[i];
    double drag = md[i] / m[i] * sd[i];
    double rhs = 1.0 / (m[i] * m[i] * s * s * s);
    double scale = std::abs(sdd[i]) + std::abs(drag) + std::abs(rhs) + 1.0;
    r[i] = (sdd[i] + drag - rhs) / scale;
  }
  return interior_max(r);
}

EPSolution pinney_solve(const StandardEP& problem, const TimeGrid& grid,
                        const std::function<double(double)>& u,
                        const std::function<double(double)>& v, double A, double B,
                        int c_sign) {
  std::vector<double> us = sample(u, grid), vs = sample(v, grid);
  std::vector<double> ud = first_derivative(us, grid.h());
  std::vector<double> vd = first_derivative(vs, grid.h());

  // u and v have to solve the linear part; check with the same stencil the
  // certification uses.
  std::vector<double> udd = second_derivative(us, grid.h());
  std::vector<double> vdd = second_derivative(vs, grid.h());
  double scale = 0.0, worst = 0.0;
  for (int i = 3; i < grid.n - 3; ++i) {
    double lam = problem.lambda(grid.t(i));
    scale = std::max({scale, std::abs(lam * us[i]), std::abs(lam * vs[i]), 1.0});
    worst = std::max({worst, std::abs(udd[i] + lam * us[i]), std::abs(vdd[i] + lam * vs[i])});
  }
  if (worst > 1e-5 * scale)
    throw std::domain_error("pinney_solve: u, v do not solve the linear equation");

  // Constant Wronskian, averaged over the interior.
  double w_sum = 0.0;
  int w_count = 0;
  for (int i = 3; i < grid.n - 3; ++i) {
    w_sum += us[i] * vd[i] - vs[i] * ud[i];
    ++w_count;
  }
  double W = w_sum / w_count;
  for (int i = 3; i < grid.n - 3; ++i) {
    double wi = us[i] * vd[i] - vs[i] * ud[i];
    if (std::abs(wi - W) > 1e-5 * (std::abs(W) + 1.0))
      throw std::domain_error("pinney_solve: Wronskian of u, v is not constant");
  }
  if (W == 0.0) throw std::domain_error("pinney_solve: u, v are not independent");

  // Snap a constraint sitting at roundoff scale to an exact C = 0; the
  // square root would otherwise amplify 1e-13 of Wronskian noise to 1e-7.
  double c2 = A * B - problem.k / (W * W);
  double c2_scale = std::max({std::abs(A * B), std::abs(problem.k / (W * W)), 1.0});
  if (c2 < -1e-10 * c2_scale)
    throw std::domain_error("pinney_solve: constraint A B >= k/W^2 violated");
  if (std::abs(c2) < 1e-10 * c2_scale) c2 = 0.0;
  double C = c_sign * std::sqrt(c2);

  EPSolution sol;
  sol.grid = grid;
  sol.A = A;
  sol.B = B;
  sol.C = C;
  sol.W = W;
  std::vector<double> s2(grid.n);
  for (int i = 0; i < grid.n; ++i)
    s2[i] = A * us[i] * us[i] + B * vs[i] * vs[i] + 2.0 * C * us[i] * vs[i];
  check_positive(s2, grid, "pinney_solve");
  sol.sigma.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) sol.sigma[i] = std::sqrt(s2[i]);
  sol.max_residual = ep_residual(problem, grid, sol.sigma);
  return sol;
}

EPSolution dissipative_solve(const DissipativeEP& problem, const TimeGrid& grid,
                             double c2, double c3, int d_sign) {
  EPSolution sol;
  sol.grid = grid;
  std::vector<double> s2(grid.n);
  if (std::abs(problem.omega2) <= 1e-12) {
    if (c2 == 0.0)
      throw std::domain_error("dissipative_solve: c2 must be nonzero at omega = 0");
    for (int i = 0; i < grid.n; ++i) {
      double mu = problem.kappa.mu(grid.t(i));
      s2[i] = 0.25 * problem.k / c2 + c2 * (mu + c3) * (mu + c3);
    }
  } else if (problem.omega2 > 0.0) {
    double w = std::sqrt(problem.omega2);
    double d2 = c2 * c2 + problem.k / problem.omega2;
    if (d2 < 0.0)
      throw std::domain_error("dissipative_solve: c2^2 + k/omega^2 is negative");
    double d = d_sign * std::sqrt(d2);
    for (int i = 0; i < grid.n; ++i) {
      double mu = problem.kappa.mu(grid.t(i));
      s2[i] = c2 * std::cos(w * (mu + c3)) + d;
    }
  } else {
    double wh = std::sqrt(-problem.omega2);
    double d2 = c2 * c2 + problem.k / problem.omega2;
    if (d2 < 0.0)
      throw std::domain_error(
          "dissipative_solve: c2^2 - k/|omega|^2 is negative on the hyperbolic branch");
    double d = d_sign * std::sqrt(d2);
    for (int i = 0; i < grid.n; ++i) {
      double mu = problem.kappa.mu(grid.t(i));
      s2[i] = c2 * std::cosh(wh * (mu + c3)) + d;
    }
  }
  check_positive(s2, grid, "dissipative_solve");
  sol.sigma.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) sol.sigma[i] = std::sqrt(s2[i]);
  sol.max_residual = ep_residual(problem, grid, sol.sigma);
  return sol;
}

EPSolution appendixB_solve(const std::function<Jet4d(double)>& mass, double B,
                           double C, const TimeGrid& grid) {
  if (!(B > 0.0)) throw std::domain_error("appendixB_solve: B must be positive");
  std::vector<double> m(grid.n);
  double m_max = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    m[i] = mass(grid.t(i)).deriv(0);
    m_max = std::max(m_max, m[i]);
  }
  std::vector<double> inv_m(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    // q = int 1/m diverges where the mass touches zero, so a near-vanishing
    // sample is as fatal as a sign change.
    if (!(m[i] > 1e-6 * m_max)) {
      std::ostringstream msg;
      msg << "appendixB_solve: mass vanishes near t = " << grid.t(i);
      throw std::domain_error(msg.str());
    }
    inv_m[i] = 1.0 / m[i];
  }
  std::vector<double> q = cumulative_simpson(inv_m, grid.h());
  EPSolution sol;
  sol.grid = grid;
  sol.B = B;
  sol.C = C;
  sol.sigma.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    double bq = B * q[i] + C;
    sol.sigma[i] = std::sqrt((1.0 + bq * bq) / B);
  }
  MassWeightedEP problem{mass};
  sol.max_residual = ep_residual(problem, grid, sol.sigma);
  return sol;
}

EPSolution ep_numeric(const StandardEP& problem, const TimeGrid& grid, double s0,
                      double sdot0) {
  auto rhs = [&problem](double t, const Eigen::VectorXd& y) {
    Eigen::VectorXd dy(2);
    double s = y(0);
    dy << y(1), -problem.lambda(t) * s + problem.k / (s * s * s);
    return dy;
  };
  EPSolution sol = numeric_common(rhs, grid, s0, sdot0, "ep_numeric");
  sol.max_residual = ep_residual(problem, grid, sol.sigma);
  return sol;
}

EPSolution ep_numeric(const DissipativeEP& problem, const TimeGrid& grid, double s0,
                      double sdot0) {
  double k0 = problem.kappa(grid.t0);
  if (std::abs(k0) < 1e-12)
    throw std::domain_error("ep_numeric: kappa(t0) = 0, cannot seed the reduced system");
  // y = (sigma, sigma'/kappa); the second component is smooth through the
  // zeros of kappa.
  auto rhs = [&problem](double t, const Eigen::VectorXd& y) {
    double ka = problem.kappa(t);
    double s = y(0);
    Eigen::VectorXd dy(2);
    dy << ka * y(1),
        ka * (-0.25 * problem.omega2 * s + 0.25 * problem.k / (s * s * s));
    return dy;
  };
  EPSolution sol = numeric_common(rhs, grid, s0, sdot0 / k0, "ep_numeric");
  for (int i = 0; i < grid.n; ++i) sol.sigma_dot[i] *= problem.kappa(grid.t(i));
  sol.max_residual = ep_residual(problem, grid, sol.sigma);
  return sol;
}

EPSolution ep_numeric(const MassWeightedEP& problem, const TimeGrid& grid, double s0,
                      double sdot0) {
  auto rhs = [&problem](double t, const Eigen::VectorXd& y) {
    Jet4d mj = problem.mass(t);
    double m = mj.deriv(0);
    double s = y(0);
    Eigen::VectorXd dy(2);
    dy << y(1), -mj.deriv(1) / m * y(1) + 1.0 / (m * m * s * s * s);
    return dy;
  };
  EPSolution sol = numeric_common(rhs, grid, s0, sdot0, "ep_numeric");
  sol.max_residual = ep_residual(problem, grid, sol.sigma);
  return sol;
}

}  // namespace nhqm
