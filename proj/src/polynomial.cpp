#include "nhqm/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nhqm {

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_ = {0.0};
  trim();
}

void Poly::trim() {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
}

double Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0.0;
  return c_[k];
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  std::vector<double> out(c_.size() + o.c_.size() - 1, 0.0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (double& a : c_) a *= s;
  trim();
  return *this;
}

double Poly::eval(double x) const {
  double s = 0.0;
  for (size_t k = c_.size(); k-- > 0;) s = s * x + c_[k];
  return s;
}

cxd Poly::eval(cxd x) const {
  cxd s{};
  for (size_t k = c_.size(); k-- > 0;) s = s * x + c_[k];
  return s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<double> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = k * c_[k];
  return Poly(std::move(d));
}

std::vector<cxd> Poly::roots() const {
  double scale = 0.0;
  for (double a : c_) scale = std::max(scale, std::abs(a));
  if (scale == 0.0) throw std::invalid_argument("Poly::roots: zero polynomial");
  int d = static_cast<int>(c_.size()) - 1;
  while (d > 0 && std::abs(c_[d]) < 1e-14 * scale) --d;
  if (d == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) comp(k, d - 1) = -c_[k] / c_[d];
  for (int k = 1; k < d; ++k) comp(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<cxd> out(d);
  for (int k = 0; k < d; ++k) out[k] = es.eigenvalues()(k);
  return out;
}

std::vector<double> Poly::real_roots(double imag_tol) const {
  std::vector<double> out;
  for (cxd r : roots())
    if (std::abs(r.imag()) < imag_tol) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nhqm
