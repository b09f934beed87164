#include "hdlap/moments.hpp"

#include <cmath>

#include "hdlap/errors.hpp"

namespace hdlap {

MomentSummary moments_from_traces(double a1, double a2, double a3, std::int64_t n) {
  if (n < 1) throw InfeasibleError("moments_from_traces: n must be positive");
  if (!(a1 > 0.0) || !(a2 > 0.0) || !(a3 > 0.0))
    throw InfeasibleError("moments_from_traces: traces must be positive");
  const double nd = static_cast<double>(n);
  MomentSummary ms;
  ms.e = a1 / nd;
  ms.v = (2.0 * nd * a2 - 2.0 * a1 * a1) / (nd * nd * (nd + 2.0));
  ms.z = (16.0 * a1 * a1 * a1 - 24.0 * nd * a1 * a2 + 8.0 * nd * nd * a3) /
         (nd * nd * nd * (nd + 2.0) * (nd + 4.0));
  return ms;
}

MomentSummary matrix_moments(const EmbeddingMatrix& em) {
  GramSummary gs = gram_traces(em);
  MomentSummary ms = moments_from_traces(gs.a1, gs.a2, gs.a3, em.n);
  auto sv = singular_values(em);
  const double sqrt_n = std::sqrt(static_cast<double>(em.n));
  ms.eta.reserve(sv.size());
  ms.x = 0.0;
  for (double s : sv) {
    double eta = s / sqrt_n;
    ms.eta.push_back(eta);
    ms.x += eta * eta * eta * eta;
  }
  return ms;
}

MomentSummary graph_moments(const InteractionGraph& g) {
  g.validate();
  if (g.edges.empty()) throw InfeasibleError("graph_moments: graph needs at least one edge");
  const double m = static_cast<double>(g.m);
  const double n = static_cast<double>(g.n());
  const double d2 = g.mean_squared_degree();
  MomentSummary ms;
  ms.e = 1.0;
  ms.v = ((d2 - 6.0) / 2.0 * (m / n) + 3.0) / (n + 2.0);
  // No closed form for Z in terms of degrees alone; take the trace route.
  ms.z = matrix_moments(build_graph_embedding(g)).z;
  return ms;
}

double complete_graph_variance(std::int64_t m) {
  const double md = static_cast<double>(m);
  return (md * md + md - 2.0) / (md * md + md + 4.0) * 2.0 / (md + 1.0);
}

ProjectionMoments projection_moments(std::int64_t m, std::int64_t n, bool rescaled) {
  if (m < 1 || m >= n) throw InfeasibleError("projection_moments: need 1 <= m < n");
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  if (rescaled) return {1.0, (nd - md) / (nd + 2.0) * 2.0 / md};
  return {md / nd, (md / nd) * (1.0 - md / nd) * 2.0 / (nd + 2.0)};
}

VarianceEnvelope variance_envelope(std::int64_t m, std::int64_t n) {
  if (m < 1 || m >= n) throw InfeasibleError("variance_envelope: need 1 <= m < n");
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  VarianceEnvelope env;
  env.v_min = (nd - md) / (nd + 2.0) * 2.0 / md;
  env.v_max = (2.0 * nd - 2.0) / (nd + 2.0);
  env.ex = 3.0 / (md + 2.0);
  env.vx = (24.0 * md - 24.0) / ((md + 2.0) * (md + 2.0) * (md + 4.0) * (md + 6.0));
  env.v_star = 2.0 * nd / (nd + 2.0) * env.ex - 2.0 / (nd + 2.0);
  return env;
}

}  // namespace hdlap
