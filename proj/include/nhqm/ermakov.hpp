#pragma once

// Ermakov-Pinney solvers. Three families of the equation show up across the
// codebase and each has a closed form:
//
//   standard       sigma'' + lambda(t) sigma = k / sigma^3
//   dissipative    sigma'' - (kdot/k) sigma' + (w^2 k^2/4) sigma
//                    = c k^2 / (4 sigma^3),  k = kappa(t)
//   mass-weighted  rho'' + (mdot/m) rho' = 1 / (m^2 rho^3)
//
// Every closed-form solver certifies its own ODE residual on the grid it was
// asked for; ep_numeric is the independent adaptive-RK route the tests use to
// cross-check the closed forms.

#include <functional>
#include <vector>

#include "nhqm/jet.hpp"
#include "nhqm/profile.hpp"
#include "nhqm/types.hpp"

namespace nhqm {

struct StandardEP {
  std::function<double(double)> lambda;
  double k = 1.0;
};

struct DissipativeEP {
  KappaProfile kappa;
  // omega^2. Positive selects the trigonometric branch of the closed form,
  // negative the hyperbolic one, zero the parabolic limit.
  double omega2 = 1.0;
  double k = 1.0;
};

struct MassWeightedEP {
  // m(t) with its derivative in the jet; must stay positive on the grid.
  std::function<Jet4d(double)> mass;
};

struct EPSolution {
  TimeGrid grid;
  std::vector<double> sigma;
  std::vector<double> sigma_dot;  // filled by the numeric branch only
  double A = 0.0, B = 0.0, C = 0.0, W = 0.0;  // Pinney data when applicable
  double max_residual = 0.0;  // interior residual of the defining equation
};

// Pinney's closed form sigma = (A u^2 + B v^2 + 2 C u v)^{1/2} where u, v are
// fundamental solutions of sigma'' + lambda sigma = 0. The caller supplies
// u and v; both are residual-checked against the linear equation and their
// Wronskian is required to be constant. C is fixed by the constraint
// C^2 = A B - k / W^2, positive root unless c_sign says otherwise.
EPSolution pinney_solve(const StandardEP& problem, const TimeGrid& grid,
                        const std::function<double(double)>& u,
                        const std::function<double(double)>& v, double A, double B,
                        int c_sign = +1);

// Closed form of the dissipative family in terms of mu(t) = int_0^t kappa.
// For omega^2 > 0:  sigma^2 = c2 cos(w (mu + c3)) + d,  d = +-sqrt(c2^2 + k/w^2)
// for omega^2 < 0 the cosine continues to a cosh and d = +-sqrt(c2^2 - k/wh^2)
// with wh = sqrt(-omega^2); the sign of d is d_sign. At omega = 0 the closed
// form degenerates to sigma^2 = k/(4 c2) + c2 (mu + c3)^2 and d_sign is unused.
EPSolution dissipative_solve(const DissipativeEP& problem, const TimeGrid& grid,
                             double c2, double c3, int d_sign = +1);

// Mass-weighted closed form rho = (1/sqrt(B)) sqrt(1 + (B q + C)^2) with
// q(t) = int_{t0}^t 1/m.
EPSolution appendixB_solve(const std::function<Jet4d(double)>& mass, double B,
                           double C, const TimeGrid& grid);

// Adaptive RK oracle (Dormand-Prince 4(5), rel tol 1e-10). The dissipative
// overload substitutes y = sigma'/kappa and integrates sigma' = kappa y,
// y' = kappa (-omega^2 sigma/4 + k/(4 sigma^3)), which is equivalent to the
// defining equation but has no kappa in a denominator, so profiles with
// zero crossings integrate cleanly; it needs kappa(t0) != 0 to seed y.
EPSolution ep_numeric(const StandardEP& problem, const TimeGrid& grid, double s0,
                      double sdot0);
EPSolution ep_numeric(const DissipativeEP& problem, const TimeGrid& grid, double s0,
                      double sdot0);
EPSolution ep_numeric(const MassWeightedEP& problem, const TimeGrid& grid, double s0,
                      double sdot0);

// Interior maximum of the defining-equation residual for a sampled sigma
// (order-6 stencils, three samples dropped at each end; certification grids
// should sit near h = 1e-2, where stencil roundoff bottoms out). The dissipative
// residual is evaluated in kappa-multiplied form,
//   kappa sigma'' - kappadot sigma' + (w^2 kappa^3/4) sigma - c kappa^3/(4 sigma^3),
// which agrees with the defining equation away from kappa = 0 and stays
// finite at the crossings. The mass-weighted residual is relative to the
// local term magnitude and masks samples where m < 1e-6 max(m), since the
// equation is singular where the mass vanishes.
double ep_residual(const StandardEP& problem, const TimeGrid& grid,
                   const std::vector<double>& sigma);
double ep_residual(const DissipativeEP& problem, const TimeGrid& grid,
                   const std::vector<double>& sigma);
double ep_residual(const MassWeightedEP& problem, const TimeGrid& grid,
                   const std::vector<double>& sigma);

}  // namespace nhqm
