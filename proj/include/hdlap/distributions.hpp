#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "hdlap/sampling.hpp"

namespace hdlap {

/// Gaussian density with mean e and variance v > 0.
struct NormalModel {
  double e;
  double v;
};

/// Beta(alpha, beta) on (0, 1); the rescaled variant has mean one and lives
/// on (0, (alpha+beta)/alpha).
struct BetaModel {
  double alpha;
  double beta;
  bool rescaled = false;

  double support_hi() const { return rescaled ? (alpha + beta) / alpha : 1.0; }
};

/// Angular distribution model of the symbol: analytic or empirical.
class DensityModel {
 public:
  explicit DensityModel(NormalModel m);
  explicit DensityModel(BetaModel m);
  explicit DensityModel(EmpiricalDistribution ed);

  double density(double t) const;
  double cdf(double t) const;
  double support_lo() const;
  double support_hi() const;

  const NormalModel* as_normal() const { return std::get_if<NormalModel>(&model_); }
  const BetaModel* as_beta() const { return std::get_if<BetaModel>(&model_); }
  const EmpiricalDistribution* as_empirical() const {
    return std::get_if<EmpiricalDistribution>(&model_);
  }

 private:
  std::variant<NormalModel, BetaModel, EmpiricalDistribution> model_;
  std::vector<double> sorted_;  // empirical only
};

/// P(||Px||^2 <= delta ||x||^2) for an orthogonal m x n projection:
/// the regularized incomplete beta I_delta(m/2, (n-m)/2).
double projection_cdf(std::int64_t m, std::int64_t n, double delta);

enum class TailSide { below, above };

/// Concentration bound phi(delta/xi)^m with xi = m/n and
/// phi(theta) = sqrt(theta) exp((1-theta)/2). Side selects which tail the
/// bound applies to; delta must lie on that side of xi.
double concentration_bound(std::int64_t m, std::int64_t n, double delta, TailSide side);

/// Sup distance over the grid x in {-4, -3.9, ..., 4} between the
/// mean-variance-standardized Beta(alpha, beta) CDF and the standard normal
/// CDF. Requires alpha, beta > 1.
double normal_limit_distance(double alpha, double beta);

/// Variance and third central moment of the rescaled beta distribution:
/// V = beta/(alpha (alpha+beta+1)),
/// Z = 2 beta (beta-alpha) / (alpha^2 (alpha+beta+1)(alpha+beta+2)).
struct RescaledBetaMoments {
  double v;
  double z;
};
RescaledBetaMoments rescaled_beta_moments(double alpha, double beta);

/// Two-moment fit of the rescaled beta model:
///   alpha = 2 (Z + V(1-V)) / (4V^2 - (1-V) Z),
///   beta  = V alpha (alpha+1) / (1 - V alpha),
/// feasible only for -(1-V)/2 < Z/(2V) < V (strict). Throws InfeasibleError
/// naming the violated side.
struct BetaFit {
  double alpha;
  double beta;
};
BetaFit fit_rescaled_beta(double v, double z);

/// Singular tail weight integral of f(t)/t over 0 < t <= delta.
/// Returns nullopt when the integral diverges (beta-type density with
/// alpha <= 1, or any density positive at zero).
std::optional<double> tail_weight(const DensityModel& model, double delta);

}  // namespace hdlap
