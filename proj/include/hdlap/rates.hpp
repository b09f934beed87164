#pragma once

#include <memory>
#include <vector>

#include "hdlap/distributions.hpp"
#include "hdlap/orthopoly.hpp"

namespace hdlap {

/// Reduction factors M_k = 1 / sum_{j<=k} p_j(0)^2 for the normal weight
/// with mean one and standard deviation sigma, k = 0..K. The terms
/// p_j(0)^2 = He_j(-1/sigma)^2 / j! are accumulated in log space; no
/// intermediate overflow for any sigma > 0, K <= 64.
std::vector<double> mk_normal(double sigma, int K);

/// Reduction factors for the (rescaled or plain) beta weight with
/// parameters alpha, beta, via the stable forward recursion
///   p_{k+1}(0)^2 = (k+b+1)(k+a+b+1)(2k+a+b+3) /
///                  ((k+1)(k+a+1)(2k+a+b+1)) * p_k(0)^2,
/// a = beta - 1, b = alpha - 1. Rescaling does not change p_k(0)^2.
std::vector<double> mk_beta(double alpha, double beta, int K);

/// Gamma-function closed form of p_k(0)^2 for the same weight
/// (cross-check for the recursion).
double beta_p0_squared_closed(double alpha, double beta, int k);

/// Error-propagation polynomial sequence P_k with P_k(0) = 1:
///  - basic:     P_k(lambda) = (1 - theta lambda)^k
///  - chebyshev: P_k(lambda) = T_k((b+a-2 lambda)/(b-a)) / T_k((b+a)/(b-a)),
///               a = 1 - rho, b = the squared spectral norm
///  - optimal:   P_k(t) = M_k sum_{j<=k} p_j(0) p_j(t) over an orthonormal
///               family, the minimizer of int P_k^2 f dt
class RateSchedule {
 public:
  enum class Kind { basic, chebyshev, optimal };

  static RateSchedule basic(double theta, int K);
  static RateSchedule chebyshev(double rho, double spectral_norm_sq, int K);
  static RateSchedule optimal(OrthogonalFamily family);

  Kind kind() const { return kind_; }
  int kmax() const { return kmax_; }

  double eval(int k, double lambda) const;

  /// Fills out[k] = P_k(lambda) for k = 0..kmax in one pass.
  void eval_all(double lambda, std::vector<double>& out) const;

  /// Predicted factors M_k (optimal schedules only).
  const std::vector<double>& mk() const;

  // Chebyshev diagnostics.
  double kappa() const { return kappa_; }
  double r() const { return r_; }
  double interval_lo() const { return a_; }
  double interval_hi() const { return b_; }
  /// Max of |P_k| on [a, b] as quoted in convergence proofs: 2r^k/(1+2r^{2k}).
  double bound_proof(int k) const;
  /// Sharp classical bound 1/T_k((b+a)/(b-a)) = 2r^k/(1+r^{2k}).
  double bound_classical(int k) const;

  const OrthogonalFamily* family() const { return family_.get(); }

 private:
  RateSchedule() = default;

  Kind kind_ = Kind::basic;
  int kmax_ = 0;
  double theta_ = 1.0;                     // basic
  double a_ = 0.0, b_ = 1.0;               // chebyshev interval
  double kappa_ = 1.0, r_ = 0.0;
  std::shared_ptr<OrthogonalFamily> family_;  // optimal
  std::vector<double> mk_;
  std::vector<double> mk_log_;
};

/// Numeric prefactor int P_k(t)^2 f(t) dt of the error bound. Normal
/// weights use Gauss-Hermite with 2k+8 nodes (no support truncation),
/// beta weights Gauss-Jacobi, empirical models the sample mean of P_k^2.
double prefactor_quadrature(const RateSchedule& schedule, const DensityModel& model, int k);

}  // namespace hdlap
