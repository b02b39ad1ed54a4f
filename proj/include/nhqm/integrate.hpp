#pragma once

// Quadrature and ODE stepping. The cumulative Simpson rule feeds phase
// integrals; the adaptive Runge-Kutta pair is the reference integrator the
// closed forms are certified against.

#include <functional>

#include "nhqm/types.hpp"

namespace nhqm {

// Cumulative integral of uniformly sampled values, I[0] = 0. Each step is a
// cubic Newton-Cotes rule over a sliding four-point window, so the cumulative
// values stay fourth order at every node.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h);
std::vector<cxd> cumulative_simpson(const std::vector<cxd>& f, double h);

// Classical fixed-step RK4 sampled on `grid` with `substeps` steps per panel.
std::vector<Eigen::VectorXd> rk4(
    const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& y0, const TimeGrid& grid, int substeps = 1);

// Dormand-Prince 4(5) with PI-free step control, landing exactly on the grid
// samples. Tolerances per component: atol + rtol*|y|.
std::vector<Eigen::VectorXd> rk45(
    const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& y0, const TimeGrid& grid, double rtol = 1e-10,
    double atol = 1e-12);

std::vector<Eigen::VectorXcd> rk45c(
    const std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>& f,
    const Eigen::VectorXcd& y0, const TimeGrid& grid, double rtol = 1e-10,
    double atol = 1e-12);

}  // namespace nhqm
