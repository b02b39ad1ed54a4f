#pragma once

// Special functions the closed-form solutions lean on. All hand-evaluated
// with series/asymptotic switching; accuracy targets are enforced by the
// oracle tests (GSL and std::cyl_bessel_i are used there only).

#include "nhqm/jet.hpp"
#include "nhqm/types.hpp"

namespace nhqm {

// Modified Bessel function of the first kind, integer order >= 0.
// Power series below x = 20 (all-positive terms, no cancellation),
// asymptotic expansion beyond.
double bessel_i(int n, double x);

// Dawson integral F(z) = e^{-z^2} int_0^z e^{u^2} du for complex z in the
// strip |Im z| <= 1.2 (everything the models evaluate lives there).
cxd dawson(cxd z);

struct AiryValues {
  cxd ai, aip, bi, bip;
};

// Ai/Bi and derivatives at complex argument. Maclaurin series inside the
// handover radius, asymptotic expansions with connection-formula sector
// rotation beyond. On the positive-axis wedge where the Maclaurin
// combination for Ai cancels catastrophically, Ai comes from stable Taylor
// steps off precomputed real-axis anchors instead.
AiryValues airy(cxd z);

// Physicists' Hermite polynomial, any arithmetic type (jets included).
template <class T>
T hermite(int n, const T& z) {
  if (n < 0) throw std::invalid_argument("hermite: order must be >= 0");
  T hk(1.0);
  if (n == 0) return hk;
  T hk1 = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    T next = 2.0 * z * hk1 - (2.0 * k) * hk;
    hk = hk1;
    hk1 = next;
  }
  return hk1;
}

// Jet lifts through the defining ODEs (w'' = z w, F' = 1 - 2 z F).
Jet4c airy_ai_jet(const Jet4c& z);
Jet4c airy_bi_jet(const Jet4c& z);
Jet4c dawson_jet(const Jet4c& z);

}  // namespace nhqm
