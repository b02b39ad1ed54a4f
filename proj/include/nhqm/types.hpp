#pragma once

// Shared scalar aliases and sampled-path containers used across the library.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <eigen3/Eigen/Dense>

namespace nhqm {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr cxd iu{0.0, 1.0};

// Uniform time grid, n samples including both endpoints.
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  int n = 2;

  TimeGrid() = default;
  TimeGrid(double a, double b, int samples) : t0(a), t1(b), n(samples) {
    if (n < 2) throw std::invalid_argument("TimeGrid: need at least 2 samples");
    if (!(t1 > t0)) throw std::invalid_argument("TimeGrid: t1 must exceed t0");
  }

  double h() const { return (t1 - t0) / (n - 1); }
  double t(int i) const { return t0 + h() * i; }

  // Same span, (n-1)*k + 1 samples.
  TimeGrid refined(int k) const { return TimeGrid(t0, t1, (n - 1) * k + 1); }
};

// Uniform spatial grid (open line segment sampling, both endpoints included).
struct SpaceGrid {
  double x0 = -1.0;
  double x1 = 1.0;
  int m = 2;

  SpaceGrid() = default;
  SpaceGrid(double a, double b, int samples) : x0(a), x1(b), m(samples) {
    if (m < 2) throw std::invalid_argument("SpaceGrid: need at least 2 samples");
    if (!(x1 > x0)) throw std::invalid_argument("SpaceGrid: x1 must exceed x0");
  }

  double h() const { return (x1 - x0) / (m - 1); }
  double x(int j) const { return x0 + h() * j; }
};

// Time-sampled operator family. All matrices share one square dimension.
struct OperatorPath {
  TimeGrid grid;
  std::vector<Mat> ops;

  OperatorPath() = default;
  OperatorPath(TimeGrid g, std::vector<Mat> samples) : grid(g), ops(std::move(samples)) {
    if ((int)ops.size() != grid.n)
      throw std::invalid_argument("OperatorPath: sample count does not match grid");
    for (const Mat& m : ops)
      if (m.rows() != ops[0].rows() || m.cols() != ops[0].rows())
        throw std::invalid_argument("OperatorPath: matrices must be square and uniform");
  }

  int dim() const { return ops.empty() ? 0 : (int)ops[0].rows(); }
};

// Named output columns; complex columns are split into _re/_im on CSV export.
struct Column {
  std::string name;
  std::vector<cxd> values;
  bool real_valued = false;
};

struct Series {
  std::vector<Column> columns;

  void add_real(const std::string& name, const std::vector<double>& v) {
    Column c;
    c.name = name;
    c.real_valued = true;
    c.values.reserve(v.size());
    for (double x : v) c.values.emplace_back(x, 0.0);
    push(std::move(c));
  }

  void add_complex(const std::string& name, const std::vector<cxd>& v) {
    Column c;
    c.name = name;
    c.values = v;
    push(std::move(c));
  }

  int rows() const { return columns.empty() ? 0 : (int)columns[0].values.size(); }

 private:
  void push(Column&& c) {
    if (!columns.empty() && c.values.size() != columns[0].values.size())
      throw std::invalid_argument("Series: column length mismatch for '" + c.name + "'");
    columns.push_back(std::move(c));
  }
};

// Entrywise sup norm; the default operator distance in residual reporting.
inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace nhqm
