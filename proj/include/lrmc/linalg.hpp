#pragma once

#include "lrmc/types.hpp"

namespace lrmc {

struct Svd {
  Matrix U;         // m1 x k
  Vector singular;  // k, decreasing
  Matrix V;         // m2 x k
};

/// Thin SVD (k = min dim). BDCSVD above 16x16, Jacobi below.
Svd thin_svd(const Matrix& A);

/// Nuclear norm ||A||_1 = sum of singular values.
double nuclear_norm(const Matrix& A);

/// Numerical rank: count of singular values > rank_tol * largest.
Index numerical_rank(const Vector& singular_values, double rank_tol);

}  // namespace lrmc
