#pragma once

// Dense operator helpers shared by every model: commutators, matrix
// exponentials, adjoint actions, Hermitian square roots.

#include "nhqm/types.hpp"

namespace nhqm {

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
inline Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

bool is_hermitian(const Mat& m, double tol = 1e-12);

// Matrix exponential. Normal matrices go through the eigendecomposition;
// everything else through scaling-and-squaring with a Pade approximant.
Mat expm(const Mat& m);

enum class BchMode { Exact, Series };

// e^A B e^{-A}, either formed directly from expm or as the nested-commutator
// series truncated at `order`.
Mat bch_adjoint(const Mat& a, const Mat& b, BchMode mode, int order = 20);

// Principal square root of a positive-definite Hermitian matrix. Rejects
// matrices whose smallest eigenvalue is at or below min_eig, naming the
// offending eigenvalue in the error.
Mat hermitian_sqrt(const Mat& m, double min_eig = 1e-12);

// Smallest singular value (invertibility guard for metric/map factors).
double min_singular_value(const Mat& m);

}  // namespace nhqm
