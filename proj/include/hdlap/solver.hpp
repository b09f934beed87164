#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

#include "hdlap/embedding.hpp"
#include "hdlap/expsum.hpp"
#include "hdlap/rates.hpp"

namespace hdlap {

/// Spectral profile of the right-hand side F (or of a prescribed solution).
struct RhsModel {
  enum class Kind { gaussian_radial, separable_gaussian, callable };

  Kind kind = Kind::gaussian_radial;
  double gamma = 1.0;                // gaussian_radial: F^(omega) = exp(-gamma ||omega||^2)
  Eigen::VectorXd gammas;            // separable: exp(-sum gamma_i omega_i^2)
  std::function<double(double, const Eigen::VectorXd&)> profile;  // |F^(r eta)|
  double envelope_gamma = 1.0;       // Gaussian decay proposal for callable profiles

  static RhsModel gaussian_radial(double gamma);
  static RhsModel separable_gaussian(Eigen::VectorXd gammas);
  static RhsModel callable(std::function<double(double, const Eigen::VectorXd&)> profile,
                           double envelope_gamma);

  /// Direction-dependent Gaussian decay rate (radial and separable kinds).
  double direction_gamma(const Eigen::VectorXd& eta) const;
};

/// Seeded Monte Carlo direction ensemble on S^{n-1}. Directions are streamed
/// chunkwise from per-chunk generator streams; accumulators are merged in
/// chunk order, so results do not depend on the thread count.
struct FrequencyEnsemble {
  std::int64_t n = 0;
  std::int64_t count = 100000;
  std::uint64_t seed = 0;
  int radial_points = 64;  // generalized Gauss-Laguerre nodes (non-closed-form profiles)
  int threads = 1;
};

/// chi(omega) = ||T^t omega||^2, homogeneous of degree two.
double symbol_eval(const EmbeddingMatrix& em, const Eigen::VectorXd& omega);

/// P_k(alpha(omega)(||T^t omega||^2 + mu)) with alpha(omega) = 1/(||omega||^2 + mu).
/// For mu = 0 this depends only on the direction of omega; omega = 0 is
/// rejected then.
double error_multiplier(const RateSchedule& schedule, int k, const EmbeddingMatrix& em, double mu,
                        const Eigen::VectorXd& omega);

enum class NormKind { barron, mixed };

/// A field given by its spectral profile: either F itself, or the solution
/// U with U^ = F^ / (||T^t omega||^2 + mu) when resolvent is set.
struct FieldSpec {
  RhsModel rhs;
  bool resolvent = false;
};

struct NormEstimate {
  double value = 0.0;    // barron: mean radial integral; mixed: sqrt of mean square
  double mean = 0.0;     // the underlying Monte Carlo mean (of R or R^2)
  double se = 0.0;       // standard error of that mean
};

/// Radial-angular norm estimate: Monte Carlo over directions, exact
/// gamma-integral radial factors for Gaussian profiles and generalized
/// Gauss-Laguerre otherwise. The L1-angular (barron) and L2-angular (mixed)
/// estimators share draws, so mean(R)^2 <= mean(R^2) on every ensemble.
NormEstimate norm_eval(const FieldSpec& field, const EmbeddingMatrix& em, double mu, double s,
                       const FrequencyEnsemble& ensemble, NormKind which);

/// Per-iteration error record of the polynomially accelerated scheme,
/// simulated through the exact per-frequency error representation
/// (the iterates themselves are never materialized).
struct IterationRun {
  double mu = 0.0;
  double s = 0.0;
  std::uint64_t seed = 0;
  std::int64_t directions = 0;

  std::vector<double> barron_error;    // k = 0..K: mean |P_k| radial factor
  std::vector<double> barron_se;
  std::vector<double> mixed_sq_error;  // mean squared radial factor
  std::vector<double> mixed_sq_se;
  bool mixed_valid = true;             // false when mu = 0 and m < 5

  double barron_norm_u = 0.0;      // = barron_error[0] (P_0 == 1)
  double mixed_sq_norm_u = 0.0;    // = mixed_sq_error[0]

  std::vector<double> predicted_mk;  // optimal schedules only

  /// Chebyshev schedules: norm restricted to frequencies with multiplier
  /// argument below the interval start a = 1 - rho (the remainder measured
  /// from the same ensemble).
  double tail_norm = 0.0;
  double tail_norm_se = 0.0;

  std::int64_t excluded = 0;       // near-kernel directions dropped (mu = 0)
  bool exclusion_warning = false;  // excluded exceeded 0.01% of draws
};

IterationRun run_iteration(const EmbeddingMatrix& em, double mu, const RhsModel& rhs,
                           const RateSchedule& schedule, const FrequencyEnsemble& ensemble,
                           double s, int K);

/// Physical-space residual check: importance-sampled Fourier quadrature of
/// -Delta u_k + mu u_k - f at the given points, with f estimated from the
/// same draws (the common factors cancel exactly for the true solution).
struct ResidualEstimate {
  double residual = 0.0;  // signed estimate
  double se = 0.0;
  double u_value = 0.0;   // u_k at the point, same draws
  bool inconclusive = false;  // se exceeds 20% of |residual|
};

/// kernel == nullptr uses the exact 1/(||omega||^2 + mu); otherwise the
/// Gauss-kernel substitute is evaluated at ||omega||^2. Requires mu > 0 and
/// a separable or radial Gaussian right-hand side.
std::vector<ResidualEstimate> residual_probe(const EmbeddingMatrix& em, double mu,
                                             const RhsModel& rhs, const RateSchedule& schedule,
                                             int k, const GaussKernelCoeffs* kernel,
                                             const std::vector<Eigen::VectorXd>& points,
                                             std::int64_t quad_count, std::uint64_t seed);

}  // namespace hdlap
