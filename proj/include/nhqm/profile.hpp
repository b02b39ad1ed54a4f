#pragma once

// Scalar driving profiles kappa(t) (gain/loss strengths, coupling sweeps)
// together with their running integral mu(t) = int_0^t kappa. The analytic
// kinds carry exact Taylor jets; tabulated data falls back to a cubic
// Hermite reconstruction with the integral taken by cumulative Simpson on a
// x4-refined grid.

#include <optional>

#include "nhqm/jet.hpp"
#include "nhqm/types.hpp"

namespace nhqm {

class KappaProfile {
 public:
  enum class Kind { Constant, Cosine, Tabulated };

  static KappaProfile constant(double c);
  static KappaProfile cosine(double a, double w);  // kappa = a cos(w t)
  static KappaProfile tabulated(const TimeGrid& grid, std::vector<double> samples);

  Kind kind() const { return kind_; }
  bool analytic() const { return kind_ != Kind::Tabulated; }

  double operator()(double t) const;
  double mu(double t) const;  // mu(0) = 0 by construction

  // kappa and mu as order-4 jets in t. Tabulated profiles only support
  // derivatives the spline can carry and reject the request otherwise.
  Jet4d jet(double t) const;
  Jet4d mu_jet(double t) const;

 private:
  KappaProfile() = default;

  Kind kind_ = Kind::Constant;
  double c_ = 0.0;           // Constant
  double a_ = 0.0, w_ = 0.0; // Cosine

  // Tabulated workspace
  TimeGrid grid_;
  std::vector<double> samples_;
  std::vector<double> slopes_;      // Catmull-Rom slopes on the input grid
  std::vector<double> mu_refined_;  // cumulative integral on the x4 grid
  double kappa_spline(double t) const;
  double kappa_spline_d1(double t) const;
};

}  // namespace nhqm
