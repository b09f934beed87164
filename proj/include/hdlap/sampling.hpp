#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

#include "hdlap/embedding.hpp"

namespace hdlap {

/// Uniformly distributed points on S^{n-1}, one per row.
struct SphereSample {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd points;
};

SphereSample sphere_sample(std::int64_t n, std::int64_t count, std::uint64_t seed);

/// Sample values with histogram and central moments. The moments are
/// recomputed from the stored values (two-pass), not accumulated.
struct EmpiricalDistribution {
  std::vector<double> values;
  std::vector<double> bin_edges;        // bin_count + 1 edges over [min, max]
  std::vector<std::int64_t> counts;     // per bin; sums to values.size()
  double mean = 0.0;
  double variance = 0.0;                // population variance
  double z = 0.0;                       // third central moment
  std::uint64_t seed = 0;
  bool degenerate = false;              // all values identical: one flagged bin

  std::int64_t count() const { return static_cast<std::int64_t>(values.size()); }
  /// Normalized density height of bin b: counts[b] / (N * width).
  double density(std::size_t b) const;
  double standard_error_mean() const;
};

EmpiricalDistribution empirical_summary(std::vector<double> values, int bin_count);

/// Monte Carlo samples of the symbol ||T^t eta||^2 on S^{n-1} for a matrix
/// given by its singular values. Default mode draws x in R^m standard normal
/// plus a single chi-square(n-m) scalar s and evaluates
/// ||Sigma0 x||^2 / (||x||^2 + s); cost is independent of n - m.
/// materialize_full draws the full n-vector instead (same distribution).
EmpiricalDistribution symbol_samples(const std::vector<double>& singular_values, std::int64_t n,
                                     std::int64_t count, std::uint64_t seed,
                                     bool materialize_full = false, int bin_count = 200,
                                     int threads = 1);

/// Same, but evaluating T^t eta with the explicit matrix.
EmpiricalDistribution symbol_samples_matrix(const EmbeddingMatrix& em, std::int64_t count,
                                            std::uint64_t seed, int bin_count = 200,
                                            int threads = 1);

/// Kolmogorov-Smirnov distance between samples and a model CDF.
double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf);

/// Two-sample KS distance.
double ks_distance_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic one-sample critical value sqrt(-ln(alpha/2)/2) / sqrt(N);
/// about 1.63/sqrt(N) at the 1% level.
double ks_critical_value(std::int64_t count, double alpha = 0.01);

/// Two-sample critical value sqrt(-ln(alpha/2)/2) * sqrt((n1+n2)/(n1*n2)).
double ks_critical_value_two_sample(std::int64_t n1, std::int64_t n2, double alpha = 0.01);

}  // namespace hdlap
