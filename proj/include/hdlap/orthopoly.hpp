#pragma once

#include <vector>

#include "hdlap/distributions.hpp"
#include "hdlap/quadrature.hpp"
#include "hdlap/special.hpp"

namespace hdlap {

/// Probabilists' Hermite polynomial He_k(x) by the three-term recurrence
/// He_{k+1}(x) = x He_k(x) - k He_{k-1}(x).
double hermite_he(int k, double x);

/// He_0..He_kmax at x in scaled (log-magnitude, sign) form. The recurrence
/// carries a separate binary exponent, so arguments far outside the zero
/// region (|x| ~ 64 and beyond) do not overflow.
std::vector<SignedLog> hermite_he_scaled(int kmax, double x);

/// Jacobi polynomial P_k^{(a,b)}(x), a, b > -1.
double jacobi_p(int k, double a, double b, double x);

/// Orthonormal polynomials of a probability weight on the real line:
/// either the normal density with mean one and standard deviation sigma
/// (Hermite case) or a beta / rescaled-beta density (Jacobi case).
/// p_0 = 1 and (p_k, p_l) = delta_kl under the weight.
class OrthogonalFamily {
 public:
  static OrthogonalFamily hermite(double sigma, int kmax);
  static OrthogonalFamily jacobi(double alpha, double beta, bool rescaled, int kmax);

  int kmax() const { return kmax_; }
  bool is_hermite() const { return hermite_; }

  /// p_k(t) in scaled form (preferred; magnitudes can exceed double range).
  SignedLog p_scaled(int k, double t) const;
  double p(int k, double t) const { return p_scaled(k, t).to_double(); }

  /// p_0(t)..p_kmax(t) in one recurrence pass.
  std::vector<SignedLog> p_all_scaled(double t) const;

  /// Values p_k(0) for k = 0..kmax.
  const std::vector<SignedLog>& p_at_zero() const { return p0_; }

  /// Reduction factors M_k = 1 / sum_{j<=k} p_j(0)^2, accumulated in log
  /// space.
  std::vector<double> mk() const;

  /// log M_k (for arithmetic below the double underflow threshold).
  std::vector<double> mk_log() const;

  /// The weight as a density model.
  DensityModel weight() const;

  /// Quadrature rule integrating g -> int g(t) f(t) dt exactly for
  /// polynomials g of degree <= 2*points - 1 (weights sum to one).
  GaussRule weighted_rule(int points) const;

 private:
  OrthogonalFamily() = default;

  bool hermite_ = true;
  double sigma_ = 1.0;                     // hermite
  double alpha_ = 1.0, beta_ = 1.0;        // jacobi
  bool rescaled_ = false;
  int kmax_ = 0;
  std::vector<SignedLog> p0_;
  std::vector<double> jacobi_log_norm_;    // log sqrt(K(0,a,b)/K(k,a,b))
};

}  // namespace hdlap
