#pragma once

// Higher-spin versions of the driven two-level model: the same non-Hermitian
// drive acting in the spin-1 and spin-3/2 representations,
//
//   H(t) = -1/2 [ Omega I + g_s gamma(t) (S_y + i alpha S_x) ],
//
// with coupling g_s = sqrt(2) for spin 1 and 2/3 for spin 3/2. A Hermitian
// Dyson map eta(t) carries H to the diagonal partner
//
//   h(t) = -1/2 [ Omega I + X(t) S_z ],
//
// where the scale X(t) (written Xi for spin 3/2) obeys a second-order
// nonlinear ODE driven by gamma,
//
//   X'' - (3/2) X'^2/X - X [ g''/g - (3/2) (g'/g)^2 + phi^2 g^2 / 2 ] + X^3/8 = 0,
//
// with phi^2 = (1 - alpha^2)/2 for spin 1 and (1 - alpha^2)/9 for spin 3/2.
// In terms of the accumulated drive mu(t) = int_0^t gamma it has the closed
// form
//
//   X = 4 gamma / [ c2 cos(phi (mu + c3)) + sqrt(c2^2 + 4/phi^2) ],
//
// trigonometric below |alpha| = 1 and hyperbolic above it (same expression
// through complex phi); the square root demands c2^2 >= 8/(alpha^2 - 1)
// resp. 36/(alpha^2 - 1) on the hyperbolic side. Substituting X = 4/sigma^2
// turns the ODE into an Ermakov-Pinney equation, which is where the closed
// form comes from and why |alpha| = 1 (phi = 0) needs separate treatment and
// is rejected here.
//
// Every eta component is an explicit function of gamma, X and their first
// derivatives only; the second derivatives that show up while solving the
// component system cancel against the X equation. For |alpha| <= 1 the
// Hamiltonian also has bounded closed-form states psi_k(t); above that they
// grow without bound and only the Dyson route survives.

#include <vector>

#include "nhqm/profile.hpp"
#include "nhqm/types.hpp"

namespace nhqm::higherspin {

// Spin generators in the standard S_z basis, [S_i, S_j] = i eps_ijk S_k.
struct SpinRep {
  double s = 1.0;  // 1 or 3/2
  Mat Sx, Sy, Sz;

  int dim() const { return static_cast<int>(Sx.rows()); }
};

// Exact generator matrices for s in {1, 3/2}; other spins are rejected.
SpinRep spin_matrices(double s);

struct SpinParams {
  double Omega = 0.0;
  double alpha = 2.0;
  KappaProfile gamma = KappaProfile::constant(1.0);
};

Mat hamiltonian(const SpinRep& rep, const SpinParams& p, double t);

// Sampled scale function with its exact first derivative. Nothing downstream
// needs higher derivatives, so none are stored.
struct ScalarPath {
  TimeGrid grid;
  std::vector<double> value, slope;
};

// Closed-form X(t) resp. Xi(t) on the grid. Throws domain_error when
// alpha^2 = 1, when c2 sits below the realness bound, when the cosine
// denominator has a pole on the grid, or when X fails to stay positive
// (gamma must stay positive on the window for that). The complex evaluation
// is checked real to 1e-12 and the imaginary part discarded.
ScalarPath solve_X_spin1(double alpha, const KappaProfile& gamma, double c2, double c3,
                         const TimeGrid& grid);
ScalarPath solve_Xi_spin32(double alpha, const KappaProfile& gamma, double c2, double c3,
                           const TimeGrid& grid);

// Twice the smallest c2 the square root tolerates, the standard margin used
// by callers that do not pick their own constant. Below |alpha| = 1 the
// bound is vacuous and the same expression is continued with |alpha^2 - 1|.
double default_c2_spin1(double alpha);
double default_c2_spin32(double alpha);

struct HigherSpinSolution {
  SpinRep rep;
  SpinParams params;
  double c1 = 1.0;
  ScalarPath scale;  // X or Xi, as handed in
  OperatorPath eta;  // Hermitian by construction
  OperatorPath h;    // -1/2 [Omega I + scale S_z], real diagonal

  // components[k] samples eta_{k+1}(t): nine vectors for spin 1, sixteen for
  // spin 3/2, in the order the matrix assembly below documents.
  std::vector<std::vector<double>> components;
};

// Assemble the closed-form Dyson map on the grid of the scale path. The
// spin-1 matrix is
//
//   [ e1        e2 - i e3   e4 - i e5 ]
//   [ e2 + i e3 e6          e7 - i e8 ]
//   [ e4 + i e5 e7 + i e8   e9        ]
//
// and the spin-3/2 one carries e1..e16 the same way (diagonal e1, e8, e13,
// e16; row-major lower triangle e2+ie3, e4+ie5, e9+ie10, e6+ie7, e11+ie12,
// e14+ie15). c1 scales the whole family. Throws domain_error when gamma or
// the scale vanishes on the grid (the spin-3/2 components carry half-integer
// powers and need both positive) and when alpha = -1, which makes the
// normalisation singular.
HigherSpinSolution eta_spin1(const SpinParams& p, const ScalarPath& X, double c1 = 1.0);
HigherSpinSolution eta_spin32(const SpinParams& p, const ScalarPath& Xi, double c1 = 1.0);

// Bounded closed-form states of H itself, restricted to |alpha| <= 1. The
// branch index runs over k = 0, +-1 for spin 1 and k = +-1, +-3 for spin
// 3/2. The spin-3/2 states are normalised to one; the spin-1 states carry
// the conventional prefactor 1/2, which normalises k = +-1 and leaves
// ||psi_0||^2 = (1 + alpha^2)/2.
struct StatePath {
  TimeGrid grid;
  std::vector<Vec> states;
};
StatePath spin_states(double s, int k, const SpinParams& p, const TimeGrid& grid);

}  // namespace nhqm::higherspin
