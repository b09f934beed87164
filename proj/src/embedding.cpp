#include "hdlap/embedding.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hdlap/errors.hpp"

namespace hdlap {

EmbeddingMatrix build_graph_embedding(const InteractionGraph& g) {
  g.validate();
  const std::int64_t m = g.m;
  const std::int64_t n = g.n();
  EmbeddingMatrix em;
  em.m = m;
  em.n = n;
  em.T = Eigen::MatrixXd::Zero(n, m);
  for (std::int64_t i = 0; i < m; ++i) em.T(i, i) = 1.0;
  const double w = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    em.T(m + static_cast<std::int64_t>(k), e[0] - 1) = w;
    em.T(m + static_cast<std::int64_t>(k), e[1] - 1) = -w;
  }
  return em;
}

EmbeddingMatrix embedding_from_matrix(Eigen::MatrixXd t) {
  EmbeddingMatrix em;
  em.n = t.rows();
  em.m = t.cols();
  em.T = std::move(t);
  if (em.n <= em.m || em.m < 1)
    throw InputError("embedding: need n > m >= 1");
  return em;
}

GramSummary gram_traces(const EmbeddingMatrix& em) {
  GramSummary gs;
  gs.S = em.T.transpose() * em.T;
  gs.a1 = gs.S.trace();
  gs.a2 = gs.S.squaredNorm();
  Eigen::MatrixXd s2 = gs.S * gs.S;
  gs.a3 = (s2.cwiseProduct(gs.S)).sum();
  return gs;
}

std::vector<double> singular_values(const EmbeddingMatrix& em) {
  GramSummary gs = gram_traces(em);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gs.S);
  std::vector<double> sv(static_cast<std::size_t>(em.m));
  for (std::int64_t i = 0; i < em.m; ++i) {
    double lam = es.eigenvalues()(i);
    sv[static_cast<std::size_t>(i)] = std::sqrt(std::max(lam, 0.0));
  }
  return sv;
}

double spectral_norm(const EmbeddingMatrix& em) {
  auto sv = singular_values(em);
  return sv.back();
}

Eigen::MatrixXd graph_laplacian(const InteractionGraph& g) {
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.m, g.m);
  for (const auto& e : g.edges) {
    lap(e[0] - 1, e[0] - 1) += 1.0;
    lap(e[1] - 1, e[1] - 1) += 1.0;
    lap(e[0] - 1, e[1] - 1) -= 1.0;
    lap(e[1] - 1, e[0] - 1) -= 1.0;
  }
  return lap;
}

std::vector<double> complete_graph_spectrum(std::int64_t m) {
  if (m < 2) throw InfeasibleError("complete_graph_spectrum: m >= 2 required");
  std::vector<double> sv;
  sv.push_back(1.0);
  double rep = std::sqrt((static_cast<double>(m) + 2.0) / 2.0);
  for (std::int64_t i = 1; i < m; ++i) sv.push_back(rep);
  return sv;
}

SignedPermutationLift permutation_lift(const InteractionGraph& g,
                                       const std::vector<std::int64_t>& pi) {
  const std::int64_t m = g.m;
  if (static_cast<std::int64_t>(pi.size()) != m)
    throw InputError("permutation_lift: pi has wrong length");
  std::set<std::int64_t> image(pi.begin(), pi.end());
  if (static_cast<std::int64_t>(image.size()) != m || *image.begin() != 1 || *image.rbegin() != m)
    throw InputError("permutation_lift: pi is not a bijection of 1..m");
  if (g.edge_count() != m * (m - 1) / 2)
    throw InfeasibleError("permutation_lift: graph must be complete");

  // Row position of each ordered pair (i, j), i < j, in the edge block.
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> edge_row;
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    edge_row[{g.edges[k][0], g.edges[k][1]}] = m + static_cast<std::int64_t>(k);

  const std::int64_t n = g.n();
  SignedPermutationLift lift;
  lift.P = Eigen::MatrixXd::Zero(m, m);
  for (std::int64_t i = 1; i <= m; ++i) lift.P(i - 1, pi[i - 1] - 1) = 1.0;

  lift.Q = Eigen::MatrixXd::Zero(n, n);
  for (std::int64_t i = 1; i <= m; ++i) lift.Q(i - 1, pi[i - 1] - 1) = 1.0;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    std::int64_t i = g.edges[k][0], j = g.edges[k][1];
    std::int64_t pi_i = pi[i - 1], pi_j = pi[j - 1];
    std::int64_t row = m + static_cast<std::int64_t>(k);
    if (pi_i < pi_j) {
      lift.Q(row, edge_row.at({pi_i, pi_j})) = 1.0;
    } else {
      lift.Q(row, edge_row.at({pi_j, pi_i})) = -1.0;
    }
  }

  // Parity via cycle decomposition.
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  int eps = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::int64_t len = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = pi[static_cast<std::size_t>(j)] - 1;
      ++len;
    }
    if (len % 2 == 0) eps = -eps;
  }
  lift.epsilon = eps;
  return lift;
}

}  // namespace hdlap
