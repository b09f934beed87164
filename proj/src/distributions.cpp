#include "hdlap/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdlap/errors.hpp"
#include "hdlap/quadrature.hpp"
#include "hdlap/special.hpp"

namespace hdlap {

namespace {

double beta_pdf(double alpha, double beta, double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp((alpha - 1.0) * std::log(t) + (beta - 1.0) * std::log1p(-t) -
                  log_beta(alpha, beta));
}

}  // namespace

DensityModel::DensityModel(NormalModel m) : model_(m) {
  if (!(m.v > 0.0)) throw InfeasibleError("NormalModel: variance must be positive");
}

DensityModel::DensityModel(BetaModel m) : model_(m) {
  if (!(m.alpha > 0.0) || !(m.beta > 0.0))
    throw InfeasibleError("BetaModel: parameters must be positive");
}

DensityModel::DensityModel(EmpiricalDistribution ed) : model_(std::move(ed)) {
  const auto& e = std::get<EmpiricalDistribution>(model_);
  sorted_ = e.values;
  std::sort(sorted_.begin(), sorted_.end());
}

double DensityModel::density(double t) const {
  if (const auto* nm = as_normal()) {
    double d = t - nm->e;
    return std::exp(-d * d / (2.0 * nm->v)) / std::sqrt(2.0 * M_PI * nm->v);
  }
  if (const auto* bm = as_beta()) {
    if (!bm->rescaled) return beta_pdf(bm->alpha, bm->beta, t);
    double c = bm->alpha / (bm->alpha + bm->beta);
    return c * beta_pdf(bm->alpha, bm->beta, c * t);
  }
  const auto* em = as_empirical();
  if (em->degenerate || t < em->bin_edges.front() || t >= em->bin_edges.back()) return 0.0;
  // Locate the (equal-width) bin.
  double lo = em->bin_edges.front(), hi = em->bin_edges.back();
  auto bins = em->counts.size();
  auto b = static_cast<std::size_t>((t - lo) / (hi - lo) * static_cast<double>(bins));
  if (b >= bins) b = bins - 1;
  return em->density(b);
}

double DensityModel::cdf(double t) const {
  if (const auto* nm = as_normal()) return normal_cdf((t - nm->e) / std::sqrt(nm->v));
  if (const auto* bm = as_beta()) {
    double x = bm->rescaled ? bm->alpha / (bm->alpha + bm->beta) * t : t;
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return inc_beta(bm->alpha, bm->beta, x);
  }
  auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double DensityModel::support_lo() const {
  if (as_normal()) return -std::numeric_limits<double>::infinity();
  if (as_beta()) return 0.0;
  return sorted_.front();
}

double DensityModel::support_hi() const {
  if (as_normal()) return std::numeric_limits<double>::infinity();
  if (const auto* bm = as_beta()) return bm->support_hi();
  return sorted_.back();
}

double projection_cdf(std::int64_t m, std::int64_t n, double delta) {
  if (m < 1 || m >= n) throw InfeasibleError("projection_cdf: need 1 <= m < n");
  if (delta < 0.0 || delta >= 1.0)
    throw InfeasibleError("projection_cdf: delta must lie in [0, 1)");
  if (delta == 0.0) return 0.0;
  return inc_beta(0.5 * static_cast<double>(m), 0.5 * static_cast<double>(n - m), delta);
}

double concentration_bound(std::int64_t m, std::int64_t n, double delta, TailSide side) {
  if (m < 1 || m >= n) throw InfeasibleError("concentration_bound: need 1 <= m < n");
  const double xi = static_cast<double>(m) / static_cast<double>(n);
  if (side == TailSide::below && !(delta > 0.0 && delta < xi))
    throw InfeasibleError("concentration_bound: below-side requires 0 < delta < m/n");
  if (side == TailSide::above && !(delta > xi && delta < 1.0))
    throw InfeasibleError("concentration_bound: above-side requires m/n < delta < 1");
  const double theta = delta / xi;
  return std::exp(static_cast<double>(m) * (0.5 * std::log(theta) + 0.5 * (1.0 - theta)));
}

double normal_limit_distance(double alpha, double beta) {
  if (!(alpha > 1.0) || !(beta > 1.0))
    throw InfeasibleError("normal_limit_distance: requires alpha, beta > 1");
  const double e = alpha / (alpha + beta);
  const double v = alpha * beta / ((alpha + beta) * (alpha + beta) * (alpha + beta + 1.0));
  const double sigma = std::sqrt(v);
  double dist = 0.0;
  for (int i = -40; i <= 40; ++i) {
    double x = 0.1 * i;
    double arg = sigma * x + e;
    double bt;
    if (arg <= 0.0)
      bt = 0.0;
    else if (arg >= 1.0)
      bt = 1.0;
    else
      bt = inc_beta(alpha, beta, arg);
    dist = std::max(dist, std::fabs(bt - normal_cdf(x)));
  }
  return dist;
}

RescaledBetaMoments rescaled_beta_moments(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw InfeasibleError("rescaled_beta_moments: parameters must be positive");
  double v = beta / (alpha * (alpha + beta + 1.0));
  double z = 2.0 * beta * (beta - alpha) /
             (alpha * alpha * (alpha + beta + 1.0) * (alpha + beta + 2.0));
  return {v, z};
}

BetaFit fit_rescaled_beta(double v, double z) {
  if (!(v > 0.0)) throw InfeasibleError("fit_rescaled_beta: V must be positive");
  const double ratio = z / (2.0 * v);
  const double slack = 1e-14 * (1.0 + std::fabs(v));
  if (!(ratio < v - slack))
    throw InfeasibleError("fit_rescaled_beta: infeasible moments, Z/(2V) < V violated (Z/(2V) = " +
                          std::to_string(ratio) + ", V = " + std::to_string(v) + ")");
  if (!(ratio > -(1.0 - v) / 2.0 + slack))
    throw InfeasibleError(
        "fit_rescaled_beta: infeasible moments, -(1-V)/2 < Z/(2V) violated (Z/(2V) = " +
        std::to_string(ratio) + ", -(1-V)/2 = " + std::to_string(-(1.0 - v) / 2.0) + ")");
  const double alpha = 2.0 * (z + v * (1.0 - v)) / (4.0 * v * v - (1.0 - v) * z);
  if (!(alpha > 0.0) || !(1.0 - v * alpha > 0.0))
    throw InfeasibleError("fit_rescaled_beta: moments admit no positive parameters");
  const double beta = v * alpha * (alpha + 1.0) / (1.0 - v * alpha);
  return {alpha, beta};
}

std::optional<double> tail_weight(const DensityModel& model, double delta) {
  if (!(delta > 0.0)) throw InfeasibleError("tail_weight: delta must be positive");

  if (model.as_normal()) return std::nullopt;  // density positive at zero: log-divergent

  if (const auto* bm = model.as_beta()) {
    if (bm->alpha <= 1.0) return std::nullopt;  // f(t)/t ~ t^{alpha-2} not integrable
    const double hi = std::min(delta, model.support_hi());
    auto integrand = [&](double t) { return model.density(t) / t; };
    if (bm->alpha < 2.0) {
      // Square-root reparameterization t = hi * u^2 softens the t^{alpha-2}
      // endpoint; the transformed integrand is u^{2 alpha - 3}-like.
      auto sub = [&](double u) { return 2.0 * hi * u * integrand(hi * u * u); };
      return integrate_gk(sub, 0.0, 1.0, 1e-10);
    }
    return integrate_gk(integrand, 0.0, hi, 1e-10);
  }

  const auto* em = model.as_empirical();
  double acc = 0.0;
  for (double t : em->values) {
    if (t <= 0.0) return std::nullopt;
    if (t <= delta) acc += 1.0 / t;
  }
  return acc / static_cast<double>(em->values.size());
}

}  // namespace hdlap
