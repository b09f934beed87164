#pragma once

#include <cstdint>
#include <vector>

#include "hdlap/embedding.hpp"
#include "hdlap/graph.hpp"

namespace hdlap {

/// Central moments of the symbol ||T^t eta||^2 on the unit sphere S^{n-1}:
///   E = A1/n
///   V = (2n A2 - 2 A1^2) / (n^2 (n+2))
///   Z = (16 A1^3 - 24 n A1 A2 + 8 n^2 A3) / (n^3 (n+2) (n+4))
/// with A_p the traces of S^p, S = T^t T.
struct MomentSummary {
  double e = 0.0;
  double v = 0.0;
  double z = 0.0;
  /// Normalized singular values eta_i = sigma_i / sqrt(n) and their fourth
  /// power sum X = sum eta_i^4; filled when derived from a matrix or graph.
  std::vector<double> eta;
  double x = 0.0;
};

MomentSummary moments_from_traces(double a1, double a2, double a3, std::int64_t n);

/// moments_from_traces on the Gram data of the given matrix, plus the
/// normalized-singular-value extras.
MomentSummary matrix_moments(const EmbeddingMatrix& em);

/// Closed form for graph matrices: E = 1 and
/// V = ((d2 - 6)/2 * m/n + 3) / (n+2), d2 the mean squared vertex degree.
/// Z is filled from the trace route.
MomentSummary graph_moments(const InteractionGraph& g);

/// Complete-graph variance (m^2+m-2)/(m^2+m+4) * 2/(m+1).
double complete_graph_variance(std::int64_t m);

/// Orthogonal m x n projections: E = m/n, V = (m/n)(1 - m/n) * 2/(n+2);
/// rescaled by sqrt(n/m): E = 1, V = (n-m)/(n+2) * 2/m.
struct ProjectionMoments {
  double e;
  double v;
};
ProjectionMoments projection_moments(std::int64_t m, std::int64_t n, bool rescaled);

/// Range of variances over E = 1 matrices and the statistics of
/// X(eta) = sum eta_i^4 for uniformly distributed normalized spectra:
///   v_min = (n-m)/(n+2) * 2/m     (attained by rescaled projections)
///   v_max = (2n-2)/(n+2)          (open upper bound)
///   ex = 3/(m+2),  vx = (24m-24)/((m+2)^2 (m+4)(m+6))
///   v_star = 2n/(n+2) * 3/(m+2) - 2/(n+2)   (expected variance)
struct VarianceEnvelope {
  double v_min;
  double v_max;
  double ex;
  double vx;
  double v_star;
};
VarianceEnvelope variance_envelope(std::int64_t m, std::int64_t n);

}  // namespace hdlap
