#include "nhqm/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nhqm::fock {

namespace {
void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("fock: dimension must be positive");
}
}  // namespace

Mat identity(int dim) {
  check_dim(dim);
  return Mat::Identity(dim, dim);
}

Mat lowering(int dim) {
  check_dim(dim);
  Mat a = Mat::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Mat raising(int dim) { return lowering(dim).adjoint(); }

Mat number(int dim) {
  check_dim(dim);
  Mat n = Mat::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

Mat position(int dim) {
  Mat a = lowering(dim);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

Mat momentum(int dim) {
  Mat a = lowering(dim);
  return iu * (a.adjoint() - a) / std::sqrt(2.0);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat interior_block(const Mat& m, int margin) {
  int keep = static_cast<int>(m.rows()) - margin;
  if (keep < 1) throw std::invalid_argument("fock: margin eats the whole space");
  return m.topLeftCorner(keep, keep);
}

double interior_residual(const Mat& m, int margin) {
  return max_abs(interior_block(m, margin));
}

Mat interior_block2(const Mat& m, int dim_each, int margin) {
  int keep = dim_each - margin;
  if (keep < 1) throw std::invalid_argument("fock: margin eats the whole space");
  if (m.rows() != dim_each * dim_each)
    throw std::invalid_argument("fock: matrix is not two-mode of the stated size");
  std::vector<int> idx;
  idx.reserve(keep * keep);
  for (int na = 0; na < keep; ++na)
    for (int nb = 0; nb < keep; ++nb) idx.push_back(na * dim_each + nb);
  Mat out(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

double interior_residual2(const Mat& m, int dim_each, int margin) {
  return max_abs(interior_block2(m, dim_each, margin));
}

}  // namespace nhqm::fock
