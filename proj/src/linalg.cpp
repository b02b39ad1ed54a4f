#include "nhqm/linalg.hpp"

#include <sstream>

#include <eigen3/Eigen/Eigenvalues>
#include <eigen3/Eigen/SVD>
#include <eigen3/unsupported/Eigen/MatrixFunctions>

namespace nhqm {

bool is_hermitian(const Mat& m, double tol) {
  return max_abs(Mat(m - m.adjoint())) <= tol * std::max(1.0, max_abs(m));
}

static bool is_normal(const Mat& m) {
  Mat c = m * m.adjoint() - m.adjoint() * m;
  double scale = std::max(1.0, max_abs(m));
  return max_abs(c) <= 1e-12 * scale * scale;
}

Mat expm(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
  if (is_normal(m)) {
    Eigen::ComplexEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("expm: eigendecomposition failed");
    Vec ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) ev(i) = std::exp(ev(i));
    // Eigenvectors of a normal matrix are unitary up to roundoff.
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  }
  return m.exp();  // scaling-and-squaring Pade
}

Mat bch_adjoint(const Mat& a, const Mat& b, BchMode mode, int order) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("bch_adjoint: dimension mismatch");
  if (mode == BchMode::Exact) {
    Mat ea = expm(a);
    Mat eai = expm(Mat(-a));
    return ea * b * eai;
  }
  if (order < 0) throw std::invalid_argument("bch_adjoint: order must be >= 0");
  Mat term = b;
  Mat sum = b;
  for (int k = 1; k <= order; ++k) {
    term = commutator(a, term) / double(k);
    sum += term;
  }
  return sum;
}

Mat hermitian_sqrt(const Mat& m, double min_eig) {
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("hermitian_sqrt: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_sqrt: eigendecomposition failed");
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) <= min_eig) {
      std::ostringstream os;
      os << "hermitian_sqrt: eigenvalue " << ev(i) << " at index " << i
         << " is not positive (threshold " << min_eig << ")";
      throw std::domain_error(os.str());
    }
  }
  Eigen::VectorXd rt = ev.cwiseSqrt();
  return es.eigenvectors() * rt.asDiagonal().toDenseMatrix().cast<cxd>() *
         es.eigenvectors().adjoint();
}

double min_singular_value(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().minCoeff();
}

}  // namespace nhqm
