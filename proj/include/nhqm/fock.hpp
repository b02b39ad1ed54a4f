#pragma once

#include "nhqm/types.hpp"

namespace nhqm::fock {

// Truncated number-basis representations. Truncation corrupts the highest few
// levels, so identity checks should go through interior_residual with a
// margin matched to the polynomial degree of the operators involved.

Mat identity(int dim);
Mat lowering(int dim);  // a |n> = sqrt(n) |n-1>
Mat raising(int dim);   // a^dag
Mat number(int dim);
Mat position(int dim);  // (a + a^dag)/sqrt(2)
Mat momentum(int dim);  // i (a^dag - a)/sqrt(2)

Mat kron(const Mat& a, const Mat& b);

// Single mode: top-left (dim - margin) block.
Mat interior_block(const Mat& m, int margin);
double interior_residual(const Mat& m, int margin);

// Two modes of dim_each levels each, index n_a * dim_each + n_b: rows and
// columns with both occupations below dim_each - margin.
Mat interior_block2(const Mat& m, int dim_each, int margin);
double interior_residual2(const Mat& m, int dim_each, int margin);

}  // namespace nhqm::fock
