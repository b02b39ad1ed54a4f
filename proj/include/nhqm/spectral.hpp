#pragma once

#include <functional>

#include "nhqm/types.hpp"

namespace nhqm {

// Uniform periodic grid on [0, 2*pi). Even point counts only: the spectral
// differentiation matrix below is the even-M form.
struct ThetaGrid {
  int m = 512;
  explicit ThetaGrid(int m_);
  ThetaGrid() = default;
  double h() const { return 2.0 * pi / m; }
  double theta(int j) const { return j * h(); }
};

// Spectral first-derivative matrix: D(j,k) = (-1)^{j-k}/2 * cot((j-k)h/2).
Mat periodic_derivative(const ThetaGrid& g);

// J = -i d/dtheta, Hermitian on the periodic grid.
Mat angular_momentum(const ThetaGrid& g);

// Diagonal multiplication operator f(theta).
Mat diagonal_of(const ThetaGrid& g, const std::function<cxd(double)>& f);

// Permutation P with (P f)(theta_j) = f(theta_{sigma(j)}); sigma must be a
// bijection of {0..m-1}, e.g. grid reflections and half-turns.
Mat index_permutation(int m, const std::function<int(int)>& sigma);

// Trapezoid quadrature of a sampled function; spectrally accurate for smooth
// periodic integrands.
cxd periodic_integral(const ThetaGrid& g, const Vec& samples);

}  // namespace nhqm
