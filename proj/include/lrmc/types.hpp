#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace lrmc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Problem dimensions m1 x m2 with the derived quantities used throughout:
/// max_dim = max(m1,m2), min_dim = min(m1,m2), d = m1 + m2.
struct MatrixDims {
  Index m1 = 0;
  Index m2 = 0;

  MatrixDims() = default;
  MatrixDims(Index rows, Index cols) : m1(rows), m2(cols) {
    if (m1 < 1 || m2 < 1)
      throw std::invalid_argument("MatrixDims: dimensions must be >= 1");
  }

  Index max_dim() const { return m1 > m2 ? m1 : m2; }
  Index min_dim() const { return m1 < m2 ? m1 : m2; }
  Index d() const { return m1 + m2; }
  Index cells() const { return m1 * m2; }

  bool operator==(const MatrixDims&) const = default;

  bool matches(const Matrix& A) const { return A.rows() == m1 && A.cols() == m2; }

  void require(const Matrix& A, const char* what) const {
    if (!matches(A))
      throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
};

/// Entrywise max-abs norm ||A||_inf.
inline double inf_norm(const Matrix& A) { return A.cwiseAbs().maxCoeff(); }

}  // namespace lrmc
