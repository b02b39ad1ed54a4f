#pragma once

// The driven two-level model
//
//   H(t) = -1/2 [ Omega I + alpha kappa(t) sigma_z + i kappa(t) sigma_x ],
//
// whose non-Hermitian drive is absorbed by a time-dependent metric rho(t).
// With the initial condition rho(0) = I everything in this family is an
// elementary function of the accumulated drive mu(t) = int_0^t kappa and the
// frequency omega = sqrt(alpha^2 - 1): trigonometric for |alpha| > 1,
// hyperbolic for |alpha| < 1 (same formulas through complex omega), and
// polynomial in mu exactly at the transition |alpha| = 1.
//
// The metric admits several independent derivations: directly from the
// quasi-Hermiticity equation (component ansatz or a factorised exponential
// ansatz), through a Dyson map (Hermitian or triangular ansatz, each with its
// own Hermitian partner h), or through a Lewis-Riesenfeld invariant. All of
// them are exposed here separately so they can be played against one another;
// they must agree entrywise to 1e-9.

#include <array>
#include <vector>

#include "nhqm/profile.hpp"
#include "nhqm/types.hpp"

namespace nhqm::twolevel {

enum class Regime { Unbroken, Exceptional, Broken };

// |alpha| > 1 + tol: Unbroken; |alpha| < 1 - tol: Broken; else Exceptional.
Regime classify_regime(double alpha, double tol);

struct TwoLevelParams {
  double Omega = 0.0;
  double alpha = 2.0;
  KappaProfile kappa = KappaProfile::constant(1.0);

  // alpha^2 - 1, kept with its sign; negative below the transition.
  double omega2() const { return alpha * alpha - 1.0; }
};

Mat hamiltonian(const TwoLevelParams& p, double t);

// Sampled metric components, rho = rho0 I + rhox sx + rhoy sy + rhoz sz.
struct TwoLevelMetric {
  TimeGrid grid;
  std::vector<double> rho0, rhox, rhoy, rhoz;

  Mat at(int i) const;

  // Positive definiteness in component form: rho0 > |(rhox, rhoy, rhoz)| at
  // every sample. Throws naming the first offending time.
  void require_positive_definite() const;
};

// Factorised metric rho = e^{(beta + i gamma) s+} e^{ln(delta) sz}
// e^{(beta - i gamma) s-}; delta stays in (0, 1] for the wired-in initial
// condition and the reconstruction below multiplies the three factors out in
// closed form.
struct MetricFactors {
  TimeGrid grid;
  std::vector<double> beta, gamma, delta;

  Mat rho_at(int i) const;
};

// Hermitian Dyson map eta = eta0 I + etax sx + etay sy (etaz = 0) with its
// Hermitian partner h = -1/2 [Omega I + chi sigma_z]. The component
// derivatives follow from the first-order system the map satisfies, so
// eta_dot_at is exact rather than finite-differenced.
struct HermitianDyson {
  TwoLevelParams params;
  TimeGrid grid;
  std::vector<double> eta0, etax, etay, chi;

  Mat eta_at(int i) const;
  Mat eta_dot_at(int i) const;
  Mat h_at(int i) const;

  // eta^dagger eta in component form (2 eta0 etax, 2 eta0 etay, ...).
  TwoLevelMetric metric() const;
};

// Triangular Dyson map built from the scalar paths (eps, tau, vartheta):
// eta = [[sqrt(vartheta), (eps + i tau)/sqrt(vartheta)], [0, 1/sqrt(vartheta)]]
// with partner h = -1/2 [Omega I + (kappa/vartheta) sigma_y
// + kappa (alpha - tau/vartheta) sigma_z]. Unlike the Hermitian map this one is not
// self-adjoint, which is the point: the Dyson map is not unique and a second,
// structurally different solution gives the equivalence tests teeth.
struct TriangularDyson {
  TwoLevelParams params;
  TimeGrid grid;
  std::vector<double> eps, tau, vartheta;

  Mat eta_at(int i) const;
  Mat h_at(int i) const;
  Mat metric_at(int i) const;  // eta^dagger eta multiplied out
};

// Lewis-Riesenfeld invariant I_H = -1/2 [c4 I + br sx + cr sy + i di sz]
// together with the metric recovered from its quasi-Hermiticity relation
// I_H^dag = rho I_H rho^{-1}, solved once with the component ansatz and once
// with the factorised ansatz. c1 scales the traceless part and c4 shifts the
// trace; neither affects rho.
struct InvariantRoute {
  TwoLevelParams params;
  TimeGrid grid;
  double c1 = 1.0;
  double c4 = 0.0;
  std::vector<double> br, cr, di;
  TwoLevelMetric rho_components;
  MetricFactors rho_factors;

  Mat invariant_at(int i) const;
  Mat invariant_dot_at(int i) const;  // exact, via the component ODEs

  // The invariant's eigenvalue pair -(c4 -+ c1)/2, constant in time by
  // construction; tests hold the sampled matrices to this.
  std::array<double, 2> eigenvalues() const;
};

TwoLevelMetric metric_from_components(const TwoLevelParams& p, const TimeGrid& grid);
MetricFactors metric_from_factors(const TwoLevelParams& p, const TimeGrid& grid);
HermitianDyson dyson_hermitian(const TwoLevelParams& p, const TimeGrid& grid);
TriangularDyson dyson_triangular(const TwoLevelParams& p, const TimeGrid& grid);
InvariantRoute metric_from_invariant(const TwoLevelParams& p, const TimeGrid& grid,
                                     double c1 = 1.0, double c4 = 0.0);

// Energy operator H + i eta^{-1} d eta/dt at sample i, assembled from the
// Hermitian Dyson route with its exact component derivatives. Its eigenvalue
// pair is real in every regime.
Mat energy_operator_at(const HermitianDyson& d, int i);

// Closed-form eigenvalue pair of the energy operator,
// E+- = -1/2 [Omega +- chi(t)], as real columns "t", "E_plus", "E_minus".
// chi decays like 1/mu^2 at the transition and stays bounded below it, so
// both columns are finite for every regime.
Series energy_observables(const TwoLevelParams& p, const TimeGrid& grid);

// Antilinear map psi -> M conj(psi).
struct AntilinearOperator {
  Mat M;
  bool conjugates = true;

  Vec apply(const Vec& v) const { return M * v.conjugate(); }

  // The similarity action on a linear operator A: M conj(A) M^{-1}. The
  // operator commutes with A exactly when this returns A back.
  Mat conjugate_by(const Mat& A) const;

  // M conj(M) = I within tol.
  bool is_involution(double tol = 1e-10) const;
};

// The antilinear symmetry of the energy operator,
//   (1/xi) [ 2 i alpha eta0 etax sigma_y - (2 eta0 etay - alpha) sigma_z ]
// followed by conjugation. It is an involution, commutes with the energy
// operator in all three regimes, and fails to commute with H itself away
// from t = 0. Degenerates at alpha = 0 (xi^2 <= 0), which is rejected.
std::vector<AntilinearOperator> pt_tilde(const TwoLevelParams& p, const TimeGrid& grid);

}  // namespace nhqm::twolevel
