#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "hdlap/graph.hpp"

namespace hdlap {

/// Full-rank n x m matrix lifting R^m into R^n. For graph-built matrices the
/// first m rows are the identity and each edge (i, j) contributes a row with
/// +1/sqrt(2) at column i and -1/sqrt(2) at column j, edges in input order.
struct EmbeddingMatrix {
  Eigen::MatrixXd T;
  std::int64_t n = 0;
  std::int64_t m = 0;
};

/// Gram matrix S = T^t T and the traces of S, S^2, S^3.
struct GramSummary {
  Eigen::MatrixXd S;
  double a1 = 0.0;  // tr S
  double a2 = 0.0;  // tr S^2 = sum of squared entries (S symmetric)
  double a3 = 0.0;  // tr S^3
};

EmbeddingMatrix build_graph_embedding(const InteractionGraph& g);

/// Wraps an arbitrary full-column-rank matrix.
EmbeddingMatrix embedding_from_matrix(Eigen::MatrixXd t);

GramSummary gram_traces(const EmbeddingMatrix& em);

/// Singular values of T, ascending, via the symmetric eigendecomposition of
/// S = T^t T (sigma_i = sqrt(lambda_i)).
std::vector<double> singular_values(const EmbeddingMatrix& em);

/// Spectral norm ||T^t|| = largest singular value.
double spectral_norm(const EmbeddingMatrix& em);

/// Graph Laplacian of g (independent construction, for the S = I + L/2 check).
Eigen::MatrixXd graph_laplacian(const InteractionGraph& g);

/// Closed-form singular values for the complete graph on m vertices:
/// 1 once and sqrt((m+2)/2) with multiplicity m-1. Ascending order.
std::vector<double> complete_graph_spectrum(std::int64_t m);

/// Vertex permutation pi lifted to the edge coordinates of the complete
/// graph: P permutes R^m, Q is the n x n signed permutation with T P = Q T,
/// epsilon the parity of pi.
struct SignedPermutationLift {
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  int epsilon = 1;
};

/// pi is 1-based: pi[i-1] = pi(i). g must be a complete graph.
SignedPermutationLift permutation_lift(const InteractionGraph& g,
                                       const std::vector<std::int64_t>& pi);

}  // namespace hdlap
