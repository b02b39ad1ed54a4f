#include "nhqm/higherspin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nhqm::higherspin {

SpinRep spin_matrices(double s) {
  SpinRep rep;
  if (std::abs(s - 1.0) < 1e-12) {
    const double r = 1.0 / std::sqrt(2.0);
    rep.s = 1.0;
    rep.Sx = Mat(3, 3);
    rep.Sx << 0.0, r, 0.0,
              r, 0.0, r,
              0.0, r, 0.0;
    rep.Sy = Mat(3, 3);
    rep.Sy << 0.0, -iu * r, 0.0,
              iu * r, 0.0, -iu * r,
              0.0, iu * r, 0.0;
    rep.Sz = Mat(3, 3);
    rep.Sz << 1.0, 0.0, 0.0,
              0.0, 0.0, 0.0,
              0.0, 0.0, -1.0;
    return rep;
  }
  if (std::abs(s - 1.5) < 1e-12) {
    const double r3 = std::sqrt(3.0);
    rep.s = 1.5;
    rep.Sx = Mat(4, 4);
    rep.Sx << 0.0, r3, 0.0, 0.0,
              r3, 0.0, 2.0, 0.0,
              0.0, 2.0, 0.0, r3,
              0.0, 0.0, r3, 0.0;
    rep.Sx *= 0.5;
    rep.Sy = Mat(4, 4);
    rep.Sy << 0.0, -iu * r3, 0.0, 0.0,
              iu * r3, 0.0, -2.0 * iu, 0.0,
              0.0, 2.0 * iu, 0.0, -iu * r3,
              0.0, 0.0, iu * r3, 0.0;
    rep.Sy *= 0.5;
    rep.Sz = Mat(4, 4);
    rep.Sz << 3.0, 0.0, 0.0, 0.0,
              0.0, 1.0, 0.0, 0.0,
              0.0, 0.0, -1.0, 0.0,
              0.0, 0.0, 0.0, -3.0;
    rep.Sz *= 0.5;
    return rep;
  }
  throw std::invalid_argument("spin_matrices: only s = 1 and s = 3/2 are provided");
}

Mat hamiltonian(const SpinRep& rep, const SpinParams& p, double t) {
  const double gs = rep.s == 1.0 ? std::sqrt(2.0) : 2.0 / 3.0;
  const int d = rep.dim();
  Mat H = p.Omega * Mat::Identity(d, d);
  H += gs * p.gamma(t) * (rep.Sy + iu * p.alpha * rep.Sx);
  return -0.5 * H;
}

namespace {

// Both spins share the scale closed form with phi^2 = (1 - alpha^2)/m,
// m = 2 resp. 9. The expression is evaluated in complex arithmetic so the
// trigonometric and hyperbolic branches need no case split; for real alpha
// the imaginary parts are exact signed zeros and the real-leak check below
// is a pure safety net.
ScalarPath solve_scale(double alpha, const KappaProfile& gamma, double c2, double c3,
                       const TimeGrid& grid, double m, const std::string& who) {
  const double beta = 1.0 - alpha * alpha;
  if (std::abs(beta) < 1e-9)
    throw std::domain_error(who + ": the scale closed form degenerates at alpha^2 = 1");
  const double root_arg = c2 * c2 + 4.0 * m / beta;
  if (root_arg < 0.0)
    throw std::domain_error(who + ": need c2^2 >= " + std::to_string(-4.0 * m / beta) +
                            " for a real scale (got c2 = " + std::to_string(c2) + ")");
  const double root = std::sqrt(root_arg);
  const cxd phi = std::sqrt(cxd(beta / m, 0.0));

  ScalarPath path;
  path.grid = grid;
  path.value.resize(grid.n);
  path.slope.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.t(i);
    const Jet4d gj = gamma.jet(t);
    const cxd arg = phi * (gamma.mu(t) + c3);
    const cxd den = c2 * std::cos(arg) + root;
    if (std::abs(den) < 1e-10 * (std::abs(c2) + root))
      throw std::domain_error(who + ": scale pole at t = " + std::to_string(t));
    const cxd dden = -c2 * phi * std::sin(arg) * gj.value();
    const cxd x = 4.0 * gj.value() / den;
    const cxd xd = 4.0 * gj.deriv(1) / den - 4.0 * gj.value() * dden / (den * den);
    if (std::abs(x.imag()) > 1e-12 * std::max(1.0, std::abs(x.real())) ||
        std::abs(xd.imag()) > 1e-12 * std::max(1.0, std::abs(xd.real())))
      throw std::runtime_error(who + ": complex leak evaluating the scale at t = " +
                               std::to_string(t));
    if (!(x.real() > 0.0))
      throw std::domain_error(who + ": scale not positive at t = " + std::to_string(t));
    path.value[i] = x.real();
    path.slope[i] = xd.real();
  }
  return path;
}

double default_c2(double alpha, double m, const std::string& who) {
  const double beta = 1.0 - alpha * alpha;
  if (std::abs(beta) < 1e-9)
    throw std::domain_error(who + ": no realness bound at alpha^2 = 1");
  return 2.0 * std::sqrt(4.0 * m / std::abs(beta));
}

}  // namespace

ScalarPath solve_X_spin1(double alpha, const KappaProfile& gamma, double c2, double c3,
                         const TimeGrid& grid) {
  return solve_scale(alpha, gamma, c2, c3, grid, 2.0, "solve_X_spin1");
}

ScalarPath solve_Xi_spin32(double alpha, const KappaProfile& gamma, double c2, double c3,
                           const TimeGrid& grid) {
  return solve_scale(alpha, gamma, c2, c3, grid, 9.0, "solve_Xi_spin32");
}

double default_c2_spin1(double alpha) { return default_c2(alpha, 2.0, "default_c2_spin1"); }
double default_c2_spin32(double alpha) { return default_c2(alpha, 9.0, "default_c2_spin32"); }

HigherSpinSolution eta_spin1(const SpinParams& p, const ScalarPath& X, double c1) {
  if (std::abs(1.0 + p.alpha) < 1e-12)
    throw std::domain_error("eta_spin1: alpha = -1 makes the component family singular");

  HigherSpinSolution sol;
  sol.rep = spin_matrices(1.0);
  sol.params = p;
  sol.c1 = c1;
  sol.scale = X;

  const TimeGrid& grid = X.grid;
  sol.components.assign(9, std::vector<double>(grid.n));
  std::vector<Mat> etas(grid.n), hs(grid.n);

  const double P = 1.0 + p.alpha;
  const double q = p.alpha - 1.0;
  const double b = p.alpha * p.alpha - 1.0;
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.t(i);
    const Jet4d gj = p.gamma.jet(t);
    const double g = gj.value(), gd = gj.deriv(1);
    const double x = X.value[i], xd = X.slope[i];
    if (g == 0.0)
      throw std::domain_error("eta_spin1: gamma vanishes at t = " + std::to_string(t));
    if (x == 0.0)
      throw std::domain_error("eta_spin1: scale vanishes at t = " + std::to_string(t));

    const double W = gd * x - g * xd;
    const double g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;

    double e[10];
    e[1] = c1 * g / x;
    e[2] = 2.0 * c1 * W / (P * g * x2);
    e[3] = c1 / P;
    e[4] = c1 * (4.0 * W * W - g2 * x4) / (2.0 * P * P * g3 * x3);
    e[5] = 2.0 * c1 * W / (P * P * g2 * x);
    e[6] = c1 * (4.0 * W * W + g2 * x4 + 2.0 * b * g4 * x2) / (2.0 * P * P * g3 * x3);
    e[7] = 2.0 * c1 * q * W / (P * P * g * x2);
    e[8] = c1 * q / (P * P);
    e[9] = c1 * q * q * g / (P * P * x);
    for (int k = 1; k <= 9; ++k) sol.components[k - 1][i] = e[k];

    Mat eta(3, 3);
    eta << e[1], cxd(e[2], -e[3]), cxd(e[4], -e[5]),
           cxd(e[2], e[3]), e[6], cxd(e[7], -e[8]),
           cxd(e[4], e[5]), cxd(e[7], e[8]), e[9];
    etas[i] = eta;

    Mat h = Mat::Zero(3, 3);
    h(0, 0) = -0.5 * (p.Omega + x);
    h(1, 1) = -0.5 * p.Omega;
    h(2, 2) = -0.5 * (p.Omega - x);
    hs[i] = h;
  }
  sol.eta = OperatorPath(grid, std::move(etas));
  sol.h = OperatorPath(grid, std::move(hs));
  return sol;
}

HigherSpinSolution eta_spin32(const SpinParams& p, const ScalarPath& Xi, double c1) {
  if (std::abs(1.0 + p.alpha) < 1e-12)
    throw std::domain_error("eta_spin32: alpha = -1 makes the component family singular");

  HigherSpinSolution sol;
  sol.rep = spin_matrices(1.5);
  sol.params = p;
  sol.c1 = c1;
  sol.scale = Xi;

  const TimeGrid& grid = Xi.grid;
  sol.components.assign(16, std::vector<double>(grid.n));
  std::vector<Mat> etas(grid.n), hs(grid.n);

  const double s3 = std::sqrt(3.0);
  const double P = 1.0 + p.alpha, P2 = P * P, P3 = P2 * P;
  const double q = p.alpha - 1.0;
  const double b = p.alpha * p.alpha - 1.0;
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.t(i);
    const Jet4d gj = p.gamma.jet(t);
    const double g = gj.value(), gd = gj.deriv(1);
    const double x = Xi.value[i], xd = Xi.slope[i];
    // half-integer powers of gamma and Xi, so both must stay positive
    if (!(g > 0.0))
      throw std::domain_error("eta_spin32: gamma not positive at t = " + std::to_string(t));
    if (!(x > 0.0))
      throw std::domain_error("eta_spin32: scale not positive at t = " + std::to_string(t));

    const double W = x * gd - g * xd;
    const double sg = std::sqrt(g), sx = std::sqrt(x);
    const double g2 = g * g, g4 = g2 * g2;
    const double x2 = x * x, x4 = x2 * x2;
    // brackets shared by several components
    const double A4 = 4.0 * W * W - x4 * g2;
    const double A8 = 36.0 * W * W + 9.0 * x4 * g2 + 2.0 * b * x2 * g4;
    const double A9 = 36.0 * W * W + 9.0 * x4 * g2 + 8.0 * b * x2 * g4;

    double e[17];
    e[1] = c1 * g * sg / (x * sx);
    e[2] = 3.0 * s3 * c1 * W / (P * x2 * sx * sg);
    e[3] = 1.5 * s3 * c1 * sg / (P * sx);
    e[4] = 9.0 * s3 * c1 * A4 / (4.0 * P2 * x2 * x * sx * g2 * sg);
    e[5] = 9.0 * s3 * c1 * W / (P2 * x * sx * g * sg);
    e[6] = 27.0 * c1 * W * (4.0 * W * W - 3.0 * x4 * g2) / (4.0 * P3 * x4 * sx * g4 * sg);
    e[7] = 27.0 * c1 * (12.0 * W * W - x4 * g2) / (8.0 * P3 * x2 * sx * g2 * g * sg);
    e[8] = c1 * A8 / (2.0 * P2 * x2 * x * sx * g2 * sg);
    e[9] = 3.0 * c1 * W * A9 / (4.0 * P3 * x4 * sx * g4 * sg);
    e[10] = 3.0 * c1 * A9 / (8.0 * P3 * x2 * sx * g2 * g * sg);
    e[11] = (q / P) * e[4];
    e[12] = (q / P) * e[5];
    e[13] = (q / P) * e[8];
    e[14] = 3.0 * s3 * c1 * q * q * W / (P3 * x2 * sx * sg);
    e[15] = 1.5 * s3 * c1 * q * q * sg / (P3 * sx);
    e[16] = c1 * q * q * q * g * sg / (P3 * x * sx);
    for (int k = 1; k <= 16; ++k) sol.components[k - 1][i] = e[k];

    Mat eta(4, 4);
    eta << e[1], cxd(e[2], -e[3]), cxd(e[4], -e[5]), cxd(e[6], -e[7]),
           cxd(e[2], e[3]), e[8], cxd(e[9], -e[10]), cxd(e[11], -e[12]),
           cxd(e[4], e[5]), cxd(e[9], e[10]), e[13], cxd(e[14], -e[15]),
           cxd(e[6], e[7]), cxd(e[11], e[12]), cxd(e[14], e[15]), e[16];
    etas[i] = eta;

    Mat h = Mat::Zero(4, 4);
    h(0, 0) = -0.5 * (p.Omega + 1.5 * x);
    h(1, 1) = -0.5 * (p.Omega + 0.5 * x);
    h(2, 2) = -0.5 * (p.Omega - 0.5 * x);
    h(3, 3) = -0.5 * (p.Omega - 1.5 * x);
    hs[i] = h;
  }
  sol.eta = OperatorPath(grid, std::move(etas));
  sol.h = OperatorPath(grid, std::move(hs));
  return sol;
}

StatePath spin_states(double s, int k, const SpinParams& p, const TimeGrid& grid) {
  const bool spin1 = std::abs(s - 1.0) < 1e-12;
  const bool spin32 = std::abs(s - 1.5) < 1e-12;
  if (!spin1 && !spin32)
    throw std::invalid_argument("spin_states: only s = 1 and s = 3/2 are provided");
  if (std::abs(p.alpha) > 1.0 + 1e-12)
    throw std::domain_error("spin_states: bounded closed-form states need |alpha| <= 1");
  const double a = p.alpha;

  // time-independent part of the state and the drift frequency of its phase
  Vec base;
  double freq;
  if (spin1) {
    if (k != 0 && k != 1 && k != -1)
      throw std::invalid_argument("spin_states: spin-1 branch index must be 0 or +-1");
    const double phi = std::sqrt(std::max(0.0, 1.0 - a * a) / 2.0);
    base = Vec(3);
    base << (k == 0 ? 1.0 : -1.0) * (1.0 - a),
            2.0 * iu * static_cast<double>(k) * phi,
            1.0 + a;
    base *= 0.5;
    freq = k * phi;
  } else {
    if (std::abs(k) != 1 && std::abs(k) != 3)
      throw std::invalid_argument("spin_states: spin-3/2 branch index must be +-1 or +-3");
    const double phih = std::sqrt(std::max(0.0, 1.0 - a * a)) / 6.0;
    const int ak = std::abs(k);
    const double norm = std::sqrt(3.0) / std::sqrt(8.0 * (ak + a * a * (3 - ak)));
    const double sm = std::sqrt(std::max(0.0, 1.0 - a));
    const double sp = std::sqrt(1.0 + a);
    base = Vec(4);
    base << iu * sm * sm * sm,
            2.0 * std::sqrt(3.0) * k * phih * sm,
            2.0 * iu * std::sqrt(3.0) * static_cast<double>(2 * ak - k * k) * phih * sp,
            static_cast<double>((k > 0 ? 1 : -1) * (2 - ak)) * sp * sp * sp;
    base *= norm;
    freq = k * phih;
  }

  StatePath out;
  out.grid = grid;
  out.states.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.t(i);
    const double theta = 0.5 * p.Omega * t - freq * p.gamma.mu(t);
    out.states[i] = std::exp(iu * theta) * base;
  }
  return out;
}

}  // namespace nhqm::higherspin
