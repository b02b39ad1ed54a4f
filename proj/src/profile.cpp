#include "nhqm/profile.hpp"

#include <cmath>

#include "nhqm/integrate.hpp"

namespace nhqm {

KappaProfile KappaProfile::constant(double c) {
  KappaProfile p;
  p.kind_ = Kind::Constant;
  p.c_ = c;
  return p;
}

KappaProfile KappaProfile::cosine(double a, double w) {
  if (w == 0.0) throw std::invalid_argument("KappaProfile::cosine: w must be nonzero");
  KappaProfile p;
  p.kind_ = Kind::Cosine;
  p.a_ = a;
  p.w_ = w;
  return p;
}

KappaProfile KappaProfile::tabulated(const TimeGrid& grid, std::vector<double> samples) {
  if ((int)samples.size() != grid.n)
    throw std::invalid_argument("KappaProfile::tabulated: sample count mismatch");
  if (grid.n < 4)
    throw std::invalid_argument("KappaProfile::tabulated: need >= 4 samples");
  KappaProfile p;
  p.kind_ = Kind::Tabulated;
  p.grid_ = grid;
  p.samples_ = std::move(samples);

  // Catmull-Rom slopes, one-sided at the ends.
  const int n = grid.n;
  const double h = grid.h();
  p.slopes_.resize(n);
  p.slopes_[0] = (-1.5 * p.samples_[0] + 2.0 * p.samples_[1] - 0.5 * p.samples_[2]) / h;
  for (int i = 1; i < n - 1; ++i)
    p.slopes_[i] = (p.samples_[i + 1] - p.samples_[i - 1]) / (2 * h);
  p.slopes_[n - 1] =
      (0.5 * p.samples_[n - 3] - 2.0 * p.samples_[n - 2] + 1.5 * p.samples_[n - 1]) / h;

  // Integral on the x4-refined grid.
  TimeGrid fine = grid.refined(4);
  std::vector<double> kf(fine.n);
  for (int i = 0; i < fine.n; ++i) kf[i] = p.kappa_spline(fine.t(i));
  p.mu_refined_ = cumulative_simpson(kf, fine.h());
  return p;
}

double KappaProfile::kappa_spline(double t) const {
  const double h = grid_.h();
  const double slack = 1e-9 * (grid_.t1 - grid_.t0);
  if (t < grid_.t0 - slack || t > grid_.t1 + slack)
    throw std::domain_error("KappaProfile: t outside the tabulated range");
  int i = std::min(grid_.n - 2, std::max(0, (int)std::floor((t - grid_.t0) / h)));
  double u = (t - grid_.t(i)) / h;
  double y0 = samples_[i], y1 = samples_[i + 1];
  double m0 = slopes_[i] * h, m1 = slopes_[i + 1] * h;
  double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 +
         (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * m1;
}

double KappaProfile::kappa_spline_d1(double t) const {
  const double h = grid_.h();
  int i = std::min(grid_.n - 2, std::max(0, (int)std::floor((t - grid_.t0) / h)));
  double u = (t - grid_.t(i)) / h;
  double y0 = samples_[i], y1 = samples_[i + 1];
  double m0 = slopes_[i] * h, m1 = slopes_[i + 1] * h;
  double u2 = u * u;
  return ((6 * u2 - 6 * u) * y0 + (3 * u2 - 4 * u + 1) * m0 + (-6 * u2 + 6 * u) * y1 +
          (3 * u2 - 2 * u) * m1) /
         h;
}

double KappaProfile::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::Cosine: return a_ * std::cos(w_ * t);
    case Kind::Tabulated: return kappa_spline(t);
  }
  throw std::logic_error("KappaProfile: bad kind");
}

double KappaProfile::mu(double t) const {
  switch (kind_) {
    case Kind::Constant: return c_ * t;
    case Kind::Cosine: return (a_ / w_) * std::sin(w_ * t);
    case Kind::Tabulated: {
      // Hermite blend of the refined cumulative values; slope is kappa itself.
      TimeGrid fine = grid_.refined(4);
      const double h = fine.h();
      int i = std::min(fine.n - 2, std::max(0, (int)std::floor((t - fine.t0) / h)));
      double u = (t - fine.t(i)) / h;
      double y0 = mu_refined_[i], y1 = mu_refined_[i + 1];
      double m0 = kappa_spline(fine.t(i)) * h, m1 = kappa_spline(fine.t(i + 1)) * h;
      double u2 = u * u, u3 = u2 * u;
      return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 +
             (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * m1;
    }
  }
  throw std::logic_error("KappaProfile: bad kind");
}

Jet4d KappaProfile::jet(double t) const {
  switch (kind_) {
    case Kind::Constant: return Jet4d(c_);
    case Kind::Cosine: return a_ * cos(w_ * Jet4d::variable(t));
    case Kind::Tabulated: {
      // Only value and first derivative are trustworthy on a cubic spline.
      Jet4d j(kappa_spline(t));
      j.c[1] = kappa_spline_d1(t);
      return j;
    }
  }
  throw std::logic_error("KappaProfile: bad kind");
}

Jet4d KappaProfile::mu_jet(double t) const {
  Jet4d k = jet(t);
  Jet4d m;
  m.c[0] = mu(t);
  for (int i = 0; i < 4; ++i) m.c[i + 1] = k.c[i] / double(i + 1);
  return m;
}

}  // namespace nhqm
