#pragma once

// Truncated Taylor arithmetic (forward-mode AD). A Jet carries the Taylor
// coefficients c[k] = f^(k)/k! about the expansion point, so derivatives of
// closed-form expressions come out exact to roundoff. Finite-difference
// stencils lose too many digits for the high-order derivatives some of the
// metric components need (fourth differences at h=1e-3 sit near 1e-4).

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace nhqm {

template <class T, int N>
struct Jet {
  std::array<T, N + 1> c{};

  Jet() = default;
  Jet(const T& value) { c[0] = value; }  // implicit: constants lift silently
  Jet(double value)
    requires(!std::is_same_v<T, double>)
  {
    c[0] = T(value);
  }

  static Jet variable(const T& value) {
    Jet j;
    j.c[0] = value;
    j.c[1] = T(1);
    return j;
  }

  const T& value() const { return c[0]; }

  // k-th derivative (not the raw coefficient).
  T deriv(int k) const {
    T f = c[k];
    for (int j = 2; j <= k; ++j) f *= double(j);
    return f;
  }

  Jet operator-() const {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = -c[k];
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) {
      T s{};
      for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
      r.c[k] = s;
    }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.c[0] == T{}) throw std::domain_error("Jet: division by a zero-valued jet");
    Jet r;
    for (int k = 0; k <= N; ++k) {
      T s = a.c[k];
      for (int j = 1; j <= k; ++j) s -= b.c[j] * r.c[k - j];
      r.c[k] = s / b.c[0];
    }
    return r;
  }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c == b.c; }
};

namespace jet_detail {
// d/dt-style chain recurrences share this shape: given g' = w(g, u) u',
// coefficients follow from k g_k = sum_{j=1..k} j u_j w_{k-j}.
}

template <class T, int N>
Jet<T, N> exp(const Jet<T, N>& u) {
  using std::exp;
  Jet<T, N> r;
  r.c[0] = exp(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T s{};
    for (int j = 1; j <= k; ++j) s += double(j) * u.c[j] * r.c[k - j];
    r.c[k] = s / double(k);
  }
  return r;
}

template <class T, int N>
Jet<T, N> log(const Jet<T, N>& u) {
  using std::log;
  if (u.c[0] == T{}) throw std::domain_error("Jet: log of zero-valued jet");
  Jet<T, N> r;
  r.c[0] = log(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T s = double(k) * u.c[k];
    for (int j = 1; j < k; ++j) s -= double(j) * r.c[j] * u.c[k - j];
    r.c[k] = s / (double(k) * u.c[0]);
  }
  return r;
}

template <class T, int N>
Jet<T, N> sqrt(const Jet<T, N>& u) {
  using std::sqrt;
  if (u.c[0] == T{}) throw std::domain_error("Jet: sqrt of zero-valued jet");
  Jet<T, N> r;
  r.c[0] = sqrt(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T s = u.c[k];
    for (int j = 1; j < k; ++j) s -= r.c[j] * r.c[k - j];
    r.c[k] = s / (2.0 * r.c[0]);
  }
  return r;
}

template <class T, int N>
Jet<T, N> pow(const Jet<T, N>& u, double a) {
  return exp(log(u) * Jet<T, N>(T(a)));
}

template <class T, int N>
void sincos(const Jet<T, N>& u, Jet<T, N>& s, Jet<T, N>& c) {
  using std::cos;
  using std::sin;
  s.c[0] = sin(u.c[0]);
  c.c[0] = cos(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T as{}, ac{};
    for (int j = 1; j <= k; ++j) {
      as += double(j) * u.c[j] * c.c[k - j];
      ac += double(j) * u.c[j] * s.c[k - j];
    }
    s.c[k] = as / double(k);
    c.c[k] = -ac / double(k);
  }
}

template <class T, int N>
Jet<T, N> sin(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sincos(u, s, c);
  return s;
}
template <class T, int N>
Jet<T, N> cos(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sincos(u, s, c);
  return c;
}
template <class T, int N>
Jet<T, N> tan(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sincos(u, s, c);
  return s / c;
}

template <class T, int N>
void sinhcosh(const Jet<T, N>& u, Jet<T, N>& s, Jet<T, N>& c) {
  using std::cosh;
  using std::sinh;
  s.c[0] = sinh(u.c[0]);
  c.c[0] = cosh(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T as{}, ac{};
    for (int j = 1; j <= k; ++j) {
      as += double(j) * u.c[j] * c.c[k - j];
      ac += double(j) * u.c[j] * s.c[k - j];
    }
    s.c[k] = as / double(k);
    c.c[k] = ac / double(k);
  }
}

template <class T, int N>
Jet<T, N> sinh(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sinhcosh(u, s, c);
  return s;
}
template <class T, int N>
Jet<T, N> cosh(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sinhcosh(u, s, c);
  return c;
}
template <class T, int N>
Jet<T, N> tanh(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sinhcosh(u, s, c);
  return s / c;
}

template <class T, int N>
Jet<T, N> atan(const Jet<T, N>& u) {
  using std::atan;
  Jet<T, N> den = Jet<T, N>(T(1)) + u * u;
  Jet<T, N> r;
  r.c[0] = atan(u.c[0]);
  // r' = u'/(1+u^2); convolve in coefficient space.
  for (int k = 1; k <= N; ++k) {
    T s = double(k) * u.c[k];
    for (int j = 1; j < k; ++j) s -= double(j) * r.c[j] * den.c[k - j];
    r.c[k] = s / (double(k) * den.c[0]);
  }
  return r;
}

template <class T, int N>
Jet<T, N> asin(const Jet<T, N>& u) {
  using std::asin;
  using std::sqrt;
  Jet<T, N> g = sqrt(Jet<T, N>(T(1)) - u * u);  // r' = u'/sqrt(1-u^2)
  Jet<T, N> r;
  r.c[0] = asin(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T s = double(k) * u.c[k];
    for (int j = 1; j < k; ++j) s -= double(j) * r.c[j] * g.c[k - j];
    r.c[k] = s / (double(k) * g.c[0]);
  }
  return r;
}

template <class T, int N>
Jet<T, N> asinh(const Jet<T, N>& u) {
  using std::asinh;
  using std::sqrt;
  Jet<T, N> g = sqrt(Jet<T, N>(T(1)) + u * u);
  Jet<T, N> r;
  r.c[0] = asinh(u.c[0]);
  for (int k = 1; k <= N; ++k) {
    T s = double(k) * u.c[k];
    for (int j = 1; j < k; ++j) s -= double(j) * r.c[j] * g.c[k - j];
    r.c[k] = s / (double(k) * g.c[0]);
  }
  return r;
}

// Taylor recomposition: evaluate f at a jet argument given the derivative
// list f^(k)(u0). Used to thread special functions (Airy, Dawson, Bessel)
// through jet arithmetic via their defining ODE recurrences.
template <class T, int N>
Jet<T, N> compose(const std::array<T, N + 1>& derivs_at_u0, const Jet<T, N>& u) {
  Jet<T, N> du = u;
  du.c[0] = T{};
  // Taylor coefficients a_k = f^(k)/k!, then Horner in du.
  std::array<T, N + 1> a = derivs_at_u0;
  double fact = 1.0;
  for (int k = 1; k <= N; ++k) {
    fact *= k;
    a[k] = a[k] / fact;
  }
  Jet<T, N> r(a[N]);
  for (int k = N - 1; k >= 0; --k) r = r * du + Jet<T, N>(a[k]);
  return r;
}

using Jet4d = Jet<double, 4>;
using Jet4c = Jet<std::complex<double>, 4>;

}  // namespace nhqm
