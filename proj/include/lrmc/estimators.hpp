#pragma once

#include <string>
#include <vector>

#include "lrmc/sampling.hpp"
#include "lrmc/types.hpp"

namespace lrmc {

/// Default regularization constant, valid for N(0,1) noise.
inline constexpr double kDefaultCstar = 6.5;

enum class EstimatorKind { KnownVariance, SquareRoot };

std::string to_string(EstimatorKind kind);
EstimatorKind estimator_kind_from_string(const std::string& s);

/// Configuration of the two penalized programs
///   known_variance: min (1/n) sum (Y_i - <X_i,A>)^2 + lambda ||A||_*
///   square_root:    min sqrt((1/n) sum (Y_i - <X_i,A>)^2) + lambda ||A||_*
/// both over the box ||A||_inf <= box_radius.
struct EstimatorConfig {
  EstimatorKind kind = EstimatorKind::KnownVariance;
  double lambda = 0.0;
  double box_radius = 0.0;  // +inf disables the box
  int max_iters = 500;
  double grad_tol = 1e-6;
  int dykstra_iters = 20;
  double dykstra_tol = 1e-10;
  double sqrt_guard_eps = 1e-12;
};

struct SolveResult {
  Matrix estimate;
  double objective = 0.0;
  int iterations = 0;
  double kkt_residual = 0.0;
  bool converged = false;
  std::vector<double> objective_trace;  // F(A_k), non-increasing after entry 0
  bool guard_engaged = false;   // square-root gradient guard hit Q < eps
  bool prox_converged = true;   // false if any inner Dykstra loop hit its cap
};

/// Singular value soft-thresholding: U max(S - tau, 0) V^T.
Matrix svt(const Matrix& A, double tau);

/// Entrywise clamp to [-a, a].
Matrix project_inf_ball(const Matrix& A, double a);

/// prox of tau*||.||_* + indicator(||.||_inf <= a) by Dykstra alternation
/// between svt and the box projection. Stops after iters rounds or when
/// successive iterates differ by < tol in Frobenius norm; *converged reports
/// which. The result is always box-feasible.
Matrix prox_box_nuclear(const Matrix& A, double tau, double a, int iters = 20,
                        double tol = 1e-10, bool* converged = nullptr);

/// lambda = 3 C* sigma sqrt(2 L log(d) / (m n)).
double lambda_known_variance(double sigma, double L, MatrixDims dims, Index n,
                             double Cstar = kDefaultCstar);

/// lambda = 6 C* sqrt(2 L log(d) / (m n)); does not depend on sigma.
double lambda_sqrt(double L, MatrixDims dims, Index n, double Cstar = kDefaultCstar);

/// True iff lambda^2 <= rho = 1 / (16 mu m1 m2 r), the upper validity
/// condition of the square-root estimator's theory (boundary inclusive).
bool sqrt_lambda_validity(double lambda, double mu, MatrixDims dims, Index r);

/// Q(A) = sqrt((1/n) sum (Y_i - <X_i,A>)^2).
double residual_rms(const Matrix& A, const ObservationSet& obs);

/// Solves the configured program by monotone accelerated proximal gradient
/// with prox_box_nuclear as the backward step.
SolveResult fit(const ObservationSet& obs, const EstimatorConfig& cfg);

/// ||A - prox_box_nuclear(A - step*grad f(A), step*lambda, a)||_F / (1 + ||A||_F)
/// for the solver's step rule; zero at any minimizer.
double kkt_residual(const Matrix& A, const ObservationSet& obs,
                    const EstimatorConfig& cfg);

}  // namespace lrmc
