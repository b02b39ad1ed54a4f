#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nhqm/ermakov.hpp"
#include "nhqm/integrate.hpp"
#include "nhqm/jet.hpp"
#include "nhqm/profile.hpp"
#include "nhqm/types.hpp"

using namespace nhqm;

namespace {

// test-side 5-point second derivative, independent of the library stencils
double d2_at(const std::function<double(double)>& f, double t, double h = 1e-3) {
  return (-f(t - 2 * h) + 16 * f(t - h) - 30 * f(t) + 16 * f(t + h) - f(t + 2 * h)) /
         (12 * h * h);
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("pinney closed form on the flat problem") {
  StandardEP flat{[](double) { return 0.0; }, 1.0};
  TimeGrid grid(0.0, 5.0, 501);
  EPSolution sol = pinney_solve(
      flat, grid, [](double) { return 1.0; }, [](double t) { return t; }, 1.0, 1.0);

  CHECK(sol.C == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sol.W == doctest::Approx(1.0).epsilon(1e-8));
  for (int i = 0; i < grid.n; i += 50) {
    double t = grid.t(i);
    CHECK(sol.sigma[i] == doctest::Approx(std::sqrt(1.0 + t * t)).epsilon(1e-13));
  }
  CHECK(sol.max_residual < 1e-10);

  // sigma'' = 1/sigma^3 holds exactly for this solution
  auto sigma = [](double t) { return std::sqrt(1.0 + t * t); };
  for (double t : {0.5, 1.7, 3.9})
    CHECK(d2_at(sigma, t) == doctest::Approx(1.0 / std::pow(sigma(t), 3)).epsilon(1e-5));
}

TEST_CASE("pinney solution certifies and matches the adaptive integrator") {
  StandardEP problem{[](double) { return 1.0; }, 1.0};
  // h = 5e-3 sits at the stencil's accuracy optimum for this solution: sigma
  // dips to 0.62, which drives the eighth derivative (truncation) to ~1e6,
  // while the roundoff floor |sigma| eps/h^2 climbs below h = 5e-3. Measured
  // residual 7.3e-11 at this grid, against the 1e-10 certification target.
  TimeGrid grid(0.0, 6.0, 1201);
  EPSolution closed = pinney_solve(
      problem, grid, [](double t) { return std::sin(t); },
      [](double t) { return std::cos(t); }, 2.0, 1.0);
  CHECK(closed.C == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(closed.max_residual < 1e-10);

  // sigma(0) = sqrt(B), sigma'(0) = C/sqrt(B) for this fundamental system
  EPSolution numeric = ep_numeric(problem, grid, 1.0, 1.0);
  CHECK(max_diff(closed.sigma, numeric.sigma) < 1e-8);

  // The conserved pairings with the fundamental solutions recover the Pinney
  // constants from the numeric trajectory alone:
  //   E_u = (sigma' u - sigma u')^2 + k u^2/sigma^2 = B W^2   (and u <-> v
  //   gives A W^2), the cross pairing gives -C W^2.
  std::vector<double> eu(grid.n), ev(grid.n), euv(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    double t = grid.t(i);
    double u = std::sin(t), ud = std::cos(t);
    double v = std::cos(t), vd = -std::sin(t);
    double s = numeric.sigma[i], sd = numeric.sigma_dot[i];
    double pu = sd * u - s * ud, pv = sd * v - s * vd;
    eu[i] = pu * pu + u * u / (s * s);
    ev[i] = pv * pv + v * v / (s * s);
    euv[i] = pu * pv + u * v / (s * s);
  }
  double A = ev[0], B = eu[0], C = -euv[0];  // W^2 = 1 here
  CHECK(A == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(B == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(C == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(C * C - (A * B - 1.0)) < 1e-8);
  for (int i = 0; i < grid.n; i += 60) {
    CHECK(std::abs(eu[i] - B) < 1e-8);
    CHECK(std::abs(ev[i] - A) < 1e-8);
  }
}

TEST_CASE("constant-coupling fundamental system has Wronskian 1/2") {
  // u = sin(w t/2)/w, v = cos(w t/2) solve the linear part of the
  // dissipative equation with kappa = 1, here w = sqrt(3).
  double w = std::sqrt(3.0);
  double k = 1.25;  // (1 + c1^2)/4 at c1 = -2
  StandardEP problem{[w](double) { return w * w / 4.0; }, k};
  TimeGrid grid(0.0, 8.0, 801);
  auto u = [w](double t) { return std::sin(w * t / 2.0) / w; };
  auto v = [w](double t) { return std::cos(w * t / 2.0); };
  EPSolution sol = pinney_solve(problem, grid, u, v, 6.0, 1.0);

  CHECK(std::abs(sol.W) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(sol.C == doctest::Approx(std::sqrt(6.0 - 4.0 * k)).epsilon(1e-8));
  CHECK(sol.max_residual < 1e-10);

  // the same solution through the dissipative closed form: write
  // A u^2 + B v^2 + 2 C u v as c2 cos(w t + phi) + d
  double a_eff = 6.0 / (w * w), b_eff = 1.0;
  double half_sum = 0.5 * (a_eff + b_eff), half_diff = 0.5 * (b_eff - a_eff);
  double cross = sol.C / w;
  double c2 = std::hypot(half_diff, cross);
  double phi = std::atan2(-cross, half_diff);
  DissipativeEP dp{KappaProfile::constant(1.0), w * w, 4.0 * k};
  EPSolution alt = dissipative_solve(dp, grid, c2, phi / w);
  CHECK(max_diff(sol.sigma, alt.sigma) < 1e-12);
  CHECK(std::abs(std::sqrt(c2 * c2 + 4.0 * k / (w * w)) - half_sum) < 1e-12);
}

TEST_CASE("dissipative closed form under a cosine coupling") {
  // metric-pinned constants for alpha = 2: c2 = -1/w^2, c3 = 0
  DissipativeEP problem{KappaProfile::cosine(1.0, 1.0), 3.0, 5.0};
  TimeGrid grid(0.0, 10.0, 1001);
  EPSolution sol = dissipative_solve(problem, grid, -1.0 / 3.0, 0.0);

  for (int i = 0; i < grid.n; i += 64) {
    double mu = std::sin(grid.t(i));
    double expected = (4.0 - std::cos(std::sqrt(3.0) * mu)) / 3.0;
    CHECK(sol.sigma[i] * sol.sigma[i] == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(sol.max_residual < 1e-8);

  // independent route through the reduced first-order system
  EPSolution numeric = ep_numeric(problem, grid, 1.0, 0.0);
  CHECK(max_diff(sol.sigma, numeric.sigma) < 1e-7);
}

TEST_CASE("hyperbolic branch of the dissipative closed form") {
  double c1 = 0.8, shift = 0.3;
  DissipativeEP problem{KappaProfile::cosine(1.0, 0.5), -4.0, 4.0 * c1 * c1};
  TimeGrid grid(0.0, 4.0, 401);
  double c2 = 0.5 * (1.0 + c1 * c1);
  EPSolution sol = dissipative_solve(problem, grid, c2, -shift);
  CHECK(sol.max_residual < 1e-8);

  // sigma^2 = c2 cosh(2(mu - shift)) + (1 - c1^2)/2, minimum 1 at mu = shift
  double d = 0.5 * (1.0 - c1 * c1);
  for (int i = 0; i < grid.n; i += 40) {
    double mu = 2.0 * std::sin(grid.t(i) / 2.0);
    double expected = c2 * std::cosh(2.0 * (mu - shift)) + d;
    CHECK(sol.sigma[i] * sol.sigma[i] == doctest::Approx(expected).epsilon(1e-13));
  }
  double lo = 1e9;
  for (double s : sol.sigma) lo = std::min(lo, s);
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-5));

  double s0 = sol.sigma[0];
  double sd0 = c2 * 2.0 * std::sinh(2.0 * (0.0 - shift)) * 1.0 / (2.0 * s0);
  EPSolution numeric = ep_numeric(problem, grid, s0, sd0);
  CHECK(max_diff(sol.sigma, numeric.sigma) < 1e-7);
}

TEST_CASE("parabolic limit at omega = 0") {
  DissipativeEP problem{KappaProfile::constant(1.0), 0.0, 2.0};
  TimeGrid grid(0.0, 5.0, 501);
  EPSolution sol = dissipative_solve(problem, grid, 0.5, 0.0);
  for (int i = 0; i < grid.n; i += 50) {
    double t = grid.t(i);
    CHECK(sol.sigma[i] == doctest::Approx(std::sqrt(1.0 + 0.5 * t * t)).epsilon(1e-13));
  }
  CHECK(sol.max_residual < 1e-10);
  EPSolution numeric = ep_numeric(problem, grid, 1.0, 0.0);
  CHECK(max_diff(sol.sigma, numeric.sigma) < 1e-8);
}

TEST_CASE("mass-weighted closed form") {
  auto unit_mass = [](double) { return Jet4d(1.0); };
  TimeGrid grid(0.0, 5.0, 501);
  EPSolution flat = appendixB_solve(unit_mass, 1.0, 0.0, grid);
  for (int i = 0; i < grid.n; i += 50) {
    double t = grid.t(i);
    CHECK(flat.sigma[i] == doctest::Approx(std::sqrt(1.0 + t * t)).epsilon(1e-10));
  }
  CHECK(flat.max_residual < 1e-8);

  // growing mass, generic constants, against the adaptive integrator
  auto mass = [](double t) {
    Jet4d tt = Jet4d::variable(t);
    return 1.0 + tt * tt;
  };
  double B = 1.3, C = 0.4;
  EPSolution closed = appendixB_solve(mass, B, C, grid);
  double r0 = std::sqrt((1.0 + C * C) / B);
  double rd0 = C / r0;  // (Bq + C) qdot / (B rho) * B at q = 0, m = 1
  MassWeightedEP problem{mass};
  EPSolution numeric = ep_numeric(problem, grid, r0, rd0);
  CHECK(max_diff(closed.sigma, numeric.sigma) < 1e-8);
  CHECK(closed.max_residual < 1e-8);

  // exact q = arctan(t) for this mass
  for (int i = 0; i < grid.n; i += 100) {
    double q = std::atan(grid.t(i));
    double bq = B * q + C;
    CHECK(closed.sigma[i] ==
          doctest::Approx(std::sqrt((1.0 + bq * bq) / B)).epsilon(1e-8));
  }
}

TEST_CASE("mass that nearly vanishes keeps a certified residual") {
  // m(t) = [1 + cos(t + t^3/3)]/(1 + t^2) drops to ~4e-3 by t = 1.6 and
  // touches zero shortly after; stay on the positive side and certify.
  auto mass = [](double t) {
    Jet4d tt = Jet4d::variable(t);
    return (1.0 + cos(tt + tt * tt * tt / 3.0)) / (1.0 + tt * tt);
  };
  TimeGrid grid(0.0, 1.6, 16001);
  EPSolution sol = appendixB_solve(mass, 1.0, 0.0, grid);
  CHECK(sol.max_residual < 1e-6);
  CHECK(sol.sigma.back() > 2.0);  // q has grown well past the flat regime

  // the same mass crosses zero before t = 1.7, which is rejected
  TimeGrid wide(0.0, 1.7, 2001);
  CHECK_THROWS_AS(appendixB_solve(mass, 1.0, 0.0, wide), std::domain_error);
}

TEST_CASE("precondition and failure reporting") {
  StandardEP problem{[](double) { return 1.0; }, 1.0};
  TimeGrid grid(0.0, 3.0, 1001);
  auto u = [](double t) { return std::sin(t); };
  auto v = [](double t) { return std::cos(t); };

  // constraint A B >= k/W^2 violated
  CHECK_THROWS_AS(pinney_solve(problem, grid, u, v, 0.5, 0.5), std::domain_error);
  // v is not a solution of the linear part
  CHECK_THROWS_AS(
      pinney_solve(problem, grid, u, [](double t) { return t * t; }, 2.0, 1.0),
      std::domain_error);
  // dependent pair
  CHECK_THROWS_AS(pinney_solve(problem, grid, u, u, 2.0, 1.0), std::domain_error);

  // attractive right-hand side collapses sigma to zero in finite time
  StandardEP attractive{[](double) { return 0.0; }, -1.0};
  CHECK_THROWS_AS(ep_numeric(attractive, grid, 1.0, -1.0), std::runtime_error);

  // hyperbolic branch realness: c2^2 < k/|omega|^2
  DissipativeEP hyp{KappaProfile::constant(1.0), -4.0, 8.0};
  CHECK_THROWS_AS(dissipative_solve(hyp, grid, 0.5, 0.0), std::domain_error);

  // sigma^2 crossing zero is reported with the time
  DissipativeEP osc{KappaProfile::constant(1.0), 4.0, 1.0};
  CHECK_THROWS_WITH_AS(dissipative_solve(osc, grid, 2.0, 0.0, -1),
                       doctest::Contains("sigma^2"), std::domain_error);
}
