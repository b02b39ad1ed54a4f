#pragma once

#include <vector>

#include "nhqm/types.hpp"

namespace nhqm {

// Dense real-coefficient polynomial, coefficients stored lowest degree first.
// Small degrees only (the recurrence families stop near degree 12), so plain
// O(n^2) arithmetic is fine.
class Poly {
 public:
  Poly() : c_{0.0} {}
  explicit Poly(std::vector<double> coeffs);
  static Poly constant(double a) { return Poly({a}); }
  static Poly x() { return Poly({0.0, 1.0}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int k) const;  // 0 outside the stored range

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(double s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(double s, Poly p) { return p *= s; }

  double eval(double x) const;
  cxd eval(cxd x) const;
  Poly derivative() const;

  // All complex roots via eigenvalues of the companion matrix of the monic
  // normalization. Leading coefficients below 1e-14 of the largest are
  // treated as zero.
  std::vector<cxd> roots() const;
  // Roots with |Im| < imag_tol, sorted ascending.
  std::vector<double> real_roots(double imag_tol = 1e-8) const;

 private:
  std::vector<double> c_;
  void trim();
};

}  // namespace nhqm
