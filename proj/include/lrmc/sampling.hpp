#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrmc/rng.hpp"
#include "lrmc/types.hpp"

namespace lrmc {

/// Probability table pi over entry positions (j,k), with precomputed row
/// marginals R_j = sum_k pi_jk and column marginals C_k = sum_j pi_jk.
/// Immutable after construction; safe to share across threads.
struct SamplingDistribution {
  MatrixDims dims;
  Matrix pi;              // m1 x m2, nonnegative, sums to 1
  Vector row_marginals;   // length m1
  Vector col_marginals;   // length m2
  std::vector<double> cdf;  // row-major cumulative table, cdf.back() == 1

  /// Draws one position (j,k) ~ pi by inverse-CDF lookup.
  std::pair<Index, Index> sample_position(CounterRng& rng) const;
};

enum class DistributionKind { Uniform, Product, Explicit };

/// JSON-friendly specification of a sampling distribution; build() realizes it.
struct DistributionSpec {
  DistributionKind kind = DistributionKind::Uniform;
  Vector row_weights;  // Product only
  Vector col_weights;  // Product only
  Matrix table;        // Explicit only

  SamplingDistribution build(MatrixDims dims) const;
};

SamplingDistribution build_uniform(MatrixDims dims);
SamplingDistribution build_product(MatrixDims dims, const Vector& row_weights,
                                   const Vector& col_weights);
SamplingDistribution build_explicit(const Matrix& table);

/// Tightest constants for which the sampling-regularity assumptions hold:
///   L  = min_dim * max over all row/column marginals,
///   mu = 1 / (m1 * m2 * min_jk pi_jk).
/// A zero pi entry makes mu undefined; that is reported through
/// assumption2_violated_at (mu is +inf in that case), not an exception, so
/// experiments can probe assumption failure.
struct RegularityConstants {
  double L = 1.0;
  double mu = 1.0;
  std::optional<std::pair<Index, Index>> assumption2_violated_at;

  bool assumption2_holds() const { return !assumption2_violated_at.has_value(); }
};

RegularityConstants regularity_constants(const SamplingDistribution& Pi);

/// ||A||^2_{L2(Pi)} = sum_jk pi_jk A_jk^2, the Pi-weighted second moment of
/// <A,X>. In debug builds asserts the lower bound
/// ||A||^2_{L2(Pi)} >= ||A||_F^2 / (m1 m2 mu) whenever all pi entries are
/// positive.
double pi_norm_sq(const Matrix& A, const SamplingDistribution& Pi);

enum class NoiseKind { Gaussian, SubExponential, Rademacher };

/// Noise generator for the trace-regression model. All kinds produce zero-mean
/// unit-variance xi; sigma scales them in the response. orlicz_K records the
/// constant K normalizing E exp(|xi|/K) <= e (1 for every built-in kind).
struct NoiseModel {
  NoiseKind kind = NoiseKind::Gaussian;
  double sigma = 0.0;
  double orlicz_K = 1.0;

  double draw_xi(CounterRng& rng) const;
};

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& s);

/// Random matrix of rank exactly r with ||A||_inf == a (sum of r Gaussian
/// outer products, rescaled).
Matrix generate_low_rank(MatrixDims dims, Index r, double a, CounterRng& rng);
Matrix generate_low_rank(MatrixDims dims, Index r, double a, std::uint64_t seed);

/// n observations of the trace-regression model: positions i.i.d. from Pi
/// (with replacement, duplicates kept), responses Y_i = A0[j_i,k_i] + sigma*xi_i.
struct ObservationSet {
  MatrixDims dims;
  std::vector<Index> rows;  // j_i, zero-based
  std::vector<Index> cols;  // k_i, zero-based
  Vector responses;         // Y_i
  NoiseModel noise;
  std::uint64_t rng_seed = 0;

  Index n() const { return static_cast<Index>(rows.size()); }
};

ObservationSet sample_observations(const Matrix& A0, const SamplingDistribution& Pi,
                                   const NoiseModel& noise, Index n,
                                   std::uint64_t seed);
ObservationSet sample_observations(const Matrix& A0, const SamplingDistribution& Pi,
                                   const NoiseModel& noise, Index n, CounterRng rng,
                                   std::uint64_t seed_label);

/// One noiseless observation of every cell, row-major. Used by the exact
/// recovery experiments where full coverage is required.
ObservationSet full_coverage_observations(const Matrix& A0, double sigma = 0.0);

/// Omega(A): vector with entry i = A[j_i, k_i].
Vector apply_observation_operator(const Matrix& A, const ObservationSet& obs);

}  // namespace lrmc
