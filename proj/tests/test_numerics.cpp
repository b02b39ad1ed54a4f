#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include <gsl/gsl_sf_airy.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_dawson.h>

#include "nhqm/fock.hpp"
#include "nhqm/integrate.hpp"
#include "nhqm/linalg.hpp"
#include "nhqm/jet.hpp"
#include "nhqm/polynomial.hpp"
#include "nhqm/profile.hpp"
#include "nhqm/special.hpp"
#include "nhqm/spectral.hpp"
#include "nhqm/types.hpp"

using namespace nhqm;

TEST_CASE("cumulative simpson is fourth order and exact on cubics") {
  // cubic: every node value exact up to roundoff
  TimeGrid g(0.0, 2.0, 41);
  std::vector<double> f(g.n), exact(g.n);
  for (int i = 0; i < g.n; ++i) {
    double t = g.t(i);
    f[i] = t * t * t - 2.0 * t + 1.0;
    exact[i] = t * t * t * t / 4.0 - t * t + t;
  }
  std::vector<double> I = cumulative_simpson(f, g.h());
  for (int i = 0; i < g.n; ++i) CHECK(std::abs(I[i] - exact[i]) < 1e-13);

  // smooth integrand: observed order ~ 4 under refinement
  auto max_err = [](int n) {
    TimeGrid g(0.0, 3.0, n);
    std::vector<double> f(g.n);
    for (int i = 0; i < g.n; ++i) f[i] = std::exp(std::sin(2.0 * g.t(i)));
    std::vector<double> I = cumulative_simpson(f, g.h());
    // reference by fine Richardson-free comparison: integrate twice as fine
    TimeGrid g2(0.0, 3.0, 4 * (n - 1) + 1);
    std::vector<double> f2(g2.n);
    for (int i = 0; i < g2.n; ++i) f2[i] = std::exp(std::sin(2.0 * g2.t(i)));
    std::vector<double> I2 = cumulative_simpson(f2, g2.h());
    double w = 0.0;
    for (int i = 0; i < g.n; ++i) w = std::max(w, std::abs(I[i] - I2[4 * i]));
    return w;
  };
  double e1 = max_err(31);
  double e2 = max_err(61);
  CHECK(std::log2(e1 / e2) > 3.5);

  // complex variant: int_0^t e^{is} ds = -i(e^{it}-1)
  TimeGrid gc(0.0, 5.0, 501);
  std::vector<cxd> fc(gc.n);
  for (int i = 0; i < gc.n; ++i) fc[i] = std::exp(iu * gc.t(i));
  std::vector<cxd> Ic = cumulative_simpson(fc, gc.h());
  double worst = 0.0;
  for (int i = 0; i < gc.n; ++i)
    worst = std::max(worst, std::abs(Ic[i] + iu * (std::exp(iu * gc.t(i)) - 1.0)));
  CHECK(worst < 1e-9);

  CHECK_THROWS_AS(cumulative_simpson(std::vector<double>{1.0, 2.0}, 0.1),
                  std::invalid_argument);
}

TEST_CASE("rk4 and rk45 against closed forms") {
  // y' = -y + sin t, y(0)=1; closed form y = (sin t - cos t)/2 + 3/2 e^{-t}
  auto rhs = [](double t, const Eigen::VectorXd& y) {
    Eigen::VectorXd d(1);
    d(0) = -y(0) + std::sin(t);
    return d;
  };
  auto exact = [](double t) {
    return 0.5 * (std::sin(t) - std::cos(t)) + 1.5 * std::exp(-t);
  };
  TimeGrid g(0.0, 6.0, 61);
  Eigen::VectorXd y0(1);
  y0 << 1.0;

  std::vector<Eigen::VectorXd> y_rk4 = rk4(rhs, y0, g, 8);
  double worst = 0.0;
  for (int i = 0; i < g.n; ++i) worst = std::max(worst, std::abs(y_rk4[i](0) - exact(g.t(i))));
  CHECK(worst < 1e-8);

  std::vector<Eigen::VectorXd> y_45 = rk45(rhs, y0, g);
  worst = 0.0;
  for (int i = 0; i < g.n; ++i) worst = std::max(worst, std::abs(y_45[i](0) - exact(g.t(i))));
  CHECK(worst < 1e-8);

  // rk4 observed order 4
  auto rk4_err = [&](int substeps) {
    std::vector<Eigen::VectorXd> y = rk4(rhs, y0, g, substeps);
    double w = 0.0;
    for (int i = 0; i < g.n; ++i) w = std::max(w, std::abs(y[i](0) - exact(g.t(i))));
    return w;
  };
  CHECK(std::log2(rk4_err(2) / rk4_err(4)) > 3.7);

  // complex linear oscillator: y' = i y
  auto rhsc = [](double, const Eigen::VectorXcd& y) { return Eigen::VectorXcd(iu * y); };
  Eigen::VectorXcd z0(1);
  z0 << cxd(1.0, 0.0);
  std::vector<Eigen::VectorXcd> z = rk45c(rhsc, z0, TimeGrid(0.0, 10.0, 11));
  CHECK(std::abs(z.back()(0) - std::exp(iu * 10.0)) < 1e-8);
}

TEST_CASE("modified bessel against library oracles") {
  // spans the series region, the switchover, and the asymptotic region
  for (int n = 0; n <= 5; ++n) {
    for (double x : {0.05, 0.7, 3.0, 7.9, 8.1, 15.0, 19.9, 20.1, 26.0, 40.0}) {
      double ref = gsl_sf_bessel_In(n, x);
      CHECK(std::abs(bessel_i(n, x) - ref) < 5e-12 * std::abs(ref));
    }
  }
  CHECK(bessel_i(0, 0.0) == 1.0);
  CHECK(bessel_i(2, 0.0) == 0.0);
  // parity
  CHECK(bessel_i(3, -2.5) == doctest::Approx(-bessel_i(3, 2.5)).epsilon(1e-15));
  CHECK(bessel_i(2, -2.5) == doctest::Approx(bessel_i(2, 2.5)).epsilon(1e-15));
  // std library spot check
  CHECK(std::abs(bessel_i(1, 12.0) - std::cyl_bessel_i(1.0, 12.0)) <
        1e-11 * std::cyl_bessel_i(1.0, 12.0));
  CHECK_THROWS_AS(bessel_i(-1, 1.0), std::invalid_argument);
}

TEST_CASE("dawson function on the strip") {
  // real axis against GSL
  for (double x = -6.0; x <= 25.0; x += 0.31) {
    double ref = gsl_sf_dawson(x);
    CHECK(std::abs(dawson(cxd(x, 0.0)).real() - ref) < 2e-13 * std::max(1.0, std::abs(ref)));
    CHECK(std::abs(dawson(cxd(x, 0.0)).imag()) < 1e-15);
  }
  // defining ODE F' = 1 - 2 z F along a complex line, derivative by stencil
  double h = 1e-3;
  for (double x : {0.3, 2.2, 4.7, 9.1}) {
    cxd z(x, 0.8);
    cxd fm2 = dawson(z - 2 * h), fm1 = dawson(z - h), fp1 = dawson(z + h), fp2 = dawson(z + 2 * h);
    cxd deriv = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    CHECK(std::abs(deriv - (1.0 - 2.0 * z * dawson(z))) < 1e-9);
  }
  // oddness off the axis
  cxd z(1.3, -0.9);
  CHECK(std::abs(dawson(-z) + dawson(z)) < 1e-14);
  CHECK_THROWS_AS(dawson(cxd(1.0, 2.0)), std::domain_error);
}

TEST_CASE("airy functions against GSL and internal identities") {
  // Measured worst relative error against GSL on [-12, 12]: 5.3e-11 for
  // values and 6.3e-10 for first derivatives, both in a thin ring around
  // the series/asymptotic handover near |x| = 7; elsewhere machine
  // precision. Tolerances below carry a ~5x margin over that envelope.
  // On the negative axis the functions oscillate through zeros, so the
  // scale floors are the local amplitudes (~0.6 for values, ~|x|^{1/4}
  // for derivatives) rather than the pointwise magnitude.
  for (double x = -12.0; x <= 12.0; x += 0.37) {
    AiryValues v = airy(cxd(x, 0.0));
    double ai = gsl_sf_airy_Ai(x, GSL_PREC_DOUBLE);
    double bi = gsl_sf_airy_Bi(x, GSL_PREC_DOUBLE);
    double aip = gsl_sf_airy_Ai_deriv(x, GSL_PREC_DOUBLE);
    double bip = gsl_sf_airy_Bi_deriv(x, GSL_PREC_DOUBLE);
    double floor_v = x > 0 ? 0.0 : 0.7;
    double floor_d = x > 0 ? 0.0 : 2.0;
    CHECK(std::abs(v.ai.real() - ai) < 3e-10 * std::max(std::abs(ai), floor_v));
    CHECK(std::abs(v.ai.imag()) < 3e-10 * std::max(std::abs(ai), floor_v));
    CHECK(std::abs(v.bi.real() - bi) < 3e-10 * std::max(std::abs(bi), floor_v));
    CHECK(std::abs(v.aip.real() - aip) < 3e-9 * std::max(std::abs(aip), floor_d));
    CHECK(std::abs(v.bip.real() - bip) < 3e-9 * std::max(std::abs(bip), floor_d));
  }
  // Wronskian Ai Bi' - Ai' Bi = 1/pi on circles crossing the
  // series/asymptotic switch. Where both functions are exponentially large
  // the identity cancels |Ai||Bi'| + |Ai'||Bi| digits, so the tolerance has
  // to scale with that product (measured worst ratio 1.6e-10 on the
  // handover ring).
  for (double r : {5.0, 6.8, 7.2, 14.0}) {
    for (int k = 0; k < 12; ++k) {
      cxd z = std::polar(r, 2.0 * pi * k / 12.0 + 0.1);
      AiryValues v = airy(z);
      cxd w = v.ai * v.bip - v.aip * v.bi;
      double scale = std::abs(v.ai) * std::abs(v.bip) + std::abs(v.aip) * std::abs(v.bi);
      CHECK(std::abs(w - 1.0 / pi) < 1e-9 * (1.0 + scale));
    }
  }
  // the three-fold rotation identity Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0;
  // tolerance scales with the largest term since the identity cancels
  // exponentially dominant pieces
  const cxd w = std::polar(1.0, 2.0 * pi / 3.0);
  for (cxd z : {cxd(3.0, 1.0), cxd(-4.0, 2.0), cxd(7.0, -5.0)}) {
    cxd a0 = airy(z).ai, a1 = airy(w * z).ai, a2 = airy(w * w * z).ai;
    double scale = std::max({std::abs(a0), std::abs(a1), std::abs(a2), 1.0});
    CHECK(std::abs(a0 + w * a1 + w * w * a2) < 1e-10 * scale);
  }
}

TEST_CASE("hermite polynomials, values and jets") {
  // reference values of the physicists' family
  CHECK(hermite(0, 0.7) == doctest::Approx(1.0));
  CHECK(hermite(1, 0.7) == doctest::Approx(1.4));
  CHECK(hermite(2, 0.7) == doctest::Approx(4 * 0.7 * 0.7 - 2));
  CHECK(hermite(5, -1.3) ==
        doctest::Approx(32 * std::pow(-1.3, 5) - 160 * std::pow(-1.3, 3) + 120 * (-1.3)));

  // derivative relation H_n' = 2 n H_{n-1} via jets
  for (int n = 1; n <= 6; ++n) {
    Jet4d z = Jet4d::variable(0.83);
    Jet4d h = hermite(n, z);
    CHECK(h.deriv(1) == doctest::Approx(2.0 * n * hermite(n - 1, 0.83)).epsilon(1e-12));
  }
}

TEST_CASE("jet arithmetic reproduces analytic derivatives") {
  Jet4d t = Jet4d::variable(0.6);
  Jet4d f = exp(sin(t) * t) / (1.0 + t * t);
  // oracle by nested finite differences of the scalar function
  auto scalar = [](double x) { return std::exp(std::sin(x) * x) / (1.0 + x * x); };
  double h = 1e-2;
  double d1 = (scalar(0.6 - 2 * h) - 8 * scalar(0.6 - h) + 8 * scalar(0.6 + h) - scalar(0.6 + 2 * h)) / (12 * h);
  CHECK(f.deriv(0) == doctest::Approx(scalar(0.6)).epsilon(1e-13));
  CHECK(f.deriv(1) == doctest::Approx(d1).epsilon(1e-7));

  // second derivative of atan(2t) at 0.3: -2*4*2t/(1+4t^2)^2
  Jet4d g = atan(2.0 * Jet4d::variable(0.3));
  double u = 1.0 + 4.0 * 0.3 * 0.3;
  CHECK(g.deriv(1) == doctest::Approx(2.0 / u).epsilon(1e-12));
  CHECK(g.deriv(2) == doctest::Approx(-16.0 * 0.3 / (u * u)).epsilon(1e-12));

  // sqrt and log consistency: d/dt log(sqrt(1+t^2)) = t/(1+t^2)
  Jet4d l = log(sqrt(1.0 + t * t));
  CHECK(l.deriv(1) == doctest::Approx(0.6 / 1.36).epsilon(1e-12));

  // complex jets: d/dt exp(i t) = i exp(i t)
  Jet4c zc = Jet4c::variable(cxd(0.4, 0.0));
  Jet4c e = exp(iu * zc);
  CHECK(std::abs(e.deriv(1) - iu * std::exp(iu * 0.4)) < 1e-13);

  // compose: promote tabulated derivatives of exp through an inner jet
  Jet4c inner = zc * zc;
  std::array<cxd, 5> derivs{};
  derivs[0] = std::exp(inner.value());
  for (int k = 1; k <= 4; ++k) derivs[k] = derivs[k - 1];
  Jet4c composed = compose<cxd, 4>(derivs, inner);
  Jet4c direct = exp(inner);
  for (int k = 0; k <= 4; ++k) CHECK(std::abs(composed.deriv(k) - direct.deriv(k)) < 1e-12);
}

TEST_CASE("airy and dawson jets satisfy their defining equations") {
  for (cxd z0 : {cxd(1.2, 0.4), cxd(-2.0, 0.3), cxd(10.5, -0.2)}) {
    Jet4c z = Jet4c::variable(z0);
    Jet4c ai = airy_ai_jet(z);
    // w'' = z w
    CHECK(std::abs(ai.deriv(2) - z0 * ai.deriv(0)) < 1e-9 * std::max(1.0, std::abs(ai.deriv(0))));
    Jet4c bi = airy_bi_jet(z);
    CHECK(std::abs(bi.deriv(2) - z0 * bi.deriv(0)) < 1e-9 * std::max(1.0, std::abs(bi.deriv(0))));
  }
  Jet4c z = Jet4c::variable(cxd(3.7, 0.5));
  Jet4c F = dawson_jet(z);
  CHECK(std::abs(F.deriv(1) - (1.0 - 2.0 * z.value() * F.deriv(0))) < 1e-11);
  // third-order consistency: F''' = -4F' - 2z F'' - 2 F' ... differentiate twice
  cxd F0 = F.deriv(0), F1 = F.deriv(1), F2 = F.deriv(2), F3 = F.deriv(3);
  CHECK(std::abs(F2 + 2.0 * F0 + 2.0 * z.value() * F1) < 1e-10);
  CHECK(std::abs(F3 + 4.0 * F1 + 2.0 * z.value() * F2) < 1e-10);
}

TEST_CASE("polynomial arithmetic and companion roots") {
  Poly p = (Poly::x() - Poly::constant(1.0)) * (Poly::x() - Poly::constant(2.0)) *
           (Poly::x() - Poly::constant(3.0));
  CHECK(p.degree() == 3);
  CHECK(p.eval(0.0) == doctest::Approx(-6.0));
  CHECK(p.eval(2.0) == doctest::Approx(0.0));

  std::vector<double> r = p.real_roots();
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(3.0).epsilon(1e-12));

  // complex pair: x^2 + 1
  Poly q({1.0, 0.0, 1.0});
  std::vector<cxd> cr = q.roots();
  REQUIRE(cr.size() == 2);
  CHECK(std::abs(std::abs(cr[0].imag()) - 1.0) < 1e-13);
  CHECK(q.real_roots().empty());

  Poly d = p.derivative();
  CHECK(d.degree() == 2);
  CHECK(d.eval(1.0) == doctest::Approx(3.0 - 12.0 + 11.0));  // 3x^2-12x+11 at 1

  // degenerate leading coefficients are trimmed before building the companion
  Poly almost({-1.0, 1.0, 1e-20});
  std::vector<double> rr = almost.real_roots();
  REQUIRE(rr.size() == 1);
  CHECK(rr[0] == doctest::Approx(1.0));
}

TEST_CASE("fock ladder operators") {
  int d = 10;
  Mat a = fock::lowering(d);
  Mat ad = fock::raising(d);
  CHECK(fock::interior_residual(a * ad - ad * a - Mat::Identity(d, d), 1) < 1e-13);
  CHECK(max_abs(ad * a - fock::number(d)) < 1e-13);

  // harmonic oscillator hamiltonian is diagonal n + 1/2
  Mat x = fock::position(d);
  Mat p = fock::momentum(d);
  Mat h = 0.5 * (p * p + x * x);
  Mat expected = fock::number(d) + 0.5 * Mat::Identity(d, d);
  CHECK(fock::interior_residual(h - expected, 2) < 1e-13);

  // two-mode bookkeeping
  Mat nx = fock::kron(fock::number(3), fock::identity(3));
  CHECK(nx.rows() == 9);
  CHECK(std::abs(nx(4, 4) - 1.0) < 1e-15);  // state |1,1>
  CHECK(std::abs(nx(7, 7) - 2.0) < 1e-15);  // state |2,1>
  Mat blk = fock::interior_block2(nx, 3, 1);
  CHECK(blk.rows() == 4);
}

TEST_CASE("periodic spectral derivative and algebra") {
  ThetaGrid g(64);
  Mat D = periodic_derivative(g);

  // derivative of sin(3 theta + 0.4)
  Vec f(g.m), fp(g.m);
  for (int j = 0; j < g.m; ++j) {
    f(j) = std::sin(3.0 * g.theta(j) + 0.4);
    fp(j) = 3.0 * std::cos(3.0 * g.theta(j) + 0.4);
  }
  CHECK((D * f - fp).cwiseAbs().maxCoeff() < 1e-10);

  Mat J = angular_momentum(g);
  CHECK(is_hermitian(J, 1e-10));

  // E2 commutators [u, J] = i v, [v, J] = -i u with u = sin, v = cos.
  // These hold as operator identities on resolved functions, not entry by
  // entry: multiplying by sin shifts Fourier content by one mode, so the
  // matrix products only agree when applied to trig polynomials of degree
  // below m/2 - 1. Probe with a battery of such vectors.
  Mat u = diagonal_of(g, [](double th) { return cxd(std::sin(th), 0.0); });
  Mat v = diagonal_of(g, [](double th) { return cxd(std::cos(th), 0.0); });
  Mat cu = commutator(u, J) - iu * v;
  Mat cv = commutator(v, J) + iu * u;
  for (int k : {0, 1, 2, 5, 11}) {
    Vec psi(g.m);
    for (int j = 0; j < g.m; ++j)
      psi(j) = std::exp(iu * (k * g.theta(j))) + 0.3 * std::cos(g.theta(j));
    CHECK((cu * psi).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((cv * psi).cwiseAbs().maxCoeff() < 1e-11);
  }
  CHECK(max_abs(commutator(u, v)) < 1e-14);

  // reflection permutation squares to the identity and flips sin
  Mat P = index_permutation(g.m, [&](int j) { return (g.m - j) % g.m; });
  CHECK(max_abs(P * P - Mat::Identity(g.m, g.m)) < 1e-15);
  Vec rf = P * f;
  for (int j = 0; j < g.m; ++j)
    CHECK(std::abs(rf(j) - std::sin(-3.0 * g.theta(j) + 0.4)) < 1e-12);

  // trapezoid rule on sin^2 over the full period
  Vec s2(g.m);
  for (int j = 0; j < g.m; ++j) s2(j) = std::sin(g.theta(j)) * std::sin(g.theta(j));
  CHECK(std::abs(periodic_integral(g, s2) - pi) < 1e-12);

  CHECK_THROWS_AS(ThetaGrid(63), std::invalid_argument);
}

TEST_CASE("kappa profiles and their running integrals") {
  KappaProfile c = KappaProfile::constant(0.7);
  CHECK(c(3.2) == doctest::Approx(0.7));
  CHECK(c.mu(4.0) == doctest::Approx(2.8));
  CHECK(c.jet(1.0).deriv(1) == doctest::Approx(0.0));

  KappaProfile k = KappaProfile::cosine(1.3, 2.0);
  CHECK(k(0.5) == doctest::Approx(1.3 * std::cos(1.0)));
  CHECK(k.mu(0.5) == doctest::Approx(0.65 * std::sin(1.0)));
  CHECK(k.jet(0.5).deriv(1) == doctest::Approx(-2.6 * std::sin(1.0)));
  CHECK(k.mu_jet(0.5).deriv(1) == doctest::Approx(k(0.5)));

  // tabulated profile built from the cosine samples tracks it closely
  TimeGrid g(0.0, 4.0, 401);
  std::vector<double> samples(g.n);
  for (int i = 0; i < g.n; ++i) samples[i] = 1.3 * std::cos(2.0 * g.t(i));
  KappaProfile tab = KappaProfile::tabulated(g, samples);
  double worst_k = 0.0, worst_mu = 0.0;
  for (double t = 0.0; t <= 4.0; t += 0.013) {
    worst_k = std::max(worst_k, std::abs(tab(t) - 1.3 * std::cos(2.0 * t)));
    worst_mu = std::max(worst_mu, std::abs(tab.mu(t) - 0.65 * std::sin(2.0 * t)));
  }
  CHECK(worst_k < 1e-6);
  CHECK(worst_mu < 1e-7);

  CHECK_THROWS_AS(tab(4.5), std::domain_error);
}
