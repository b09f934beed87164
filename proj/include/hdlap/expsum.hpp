#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hdlap {

/// Exponential-sum approximation of 1/r,
///   v(r) = h sum_{k=k1}^{k2} e^{-kh} exp(-e^{-kh} r),
/// optionally rescaled by mu > 0 to (1/mu) v(r/mu), which moves the valid
/// interval from [1, R] to [mu, R mu] at identical relative accuracy.
/// mu = 0 denotes the unscaled form.
struct ExpSumApprox {
  double h = 1.0;
  int k1 = 0;
  int k2 = 0;
  double mu = 0.0;

  double scale() const { return mu == 0.0 ? 1.0 : mu; }

  /// v(r), r > 0. Direct summation for small r, the window form
  /// phi(ln r)/r for r above the scale (avoids summing underflowed terms).
  double eval(double r) const;

  /// Window function phi(s) = h sum exp(-(e^{s-kh}) + (s-kh)) of the
  /// unscaled sum; v(r) = phi(ln(r/scale)) / r * ... with the scale folded.
  double window(double s) const;
};

ExpSumApprox build_expsum(double h, int k1, int k2);

/// Same node set, valid on [mu, R mu]; requires mu > 0.
ExpSumApprox rescale_to_mu(const ExpSumApprox& approx, double mu);

/// Relative-error scan of v against 1/r over log-equispaced points.
/// The deviation is computed in the window form v(r) * r - 1.
struct ScanResult {
  double max_abs = 0.0;
  double arg_max = 0.0;
  double max_signed = 0.0;  // largest v*r - 1 (overshoot)
  double min_signed = 0.0;  // smallest (undershoot)
};
ScanResult relative_error_scan(const ExpSumApprox& approx, double r_lo, double r_hi,
                               std::int64_t points);

/// Asymptotic relative error 4 pi h^{-1/2} e^{-pi^2/h} of the corresponding
/// infinite series; a guide, not a bound.
double predicted_relative_error(double h);

/// Separable Gauss-kernel form: 1/(rho + mu) ~ sum_k a_k e^{-beta_k rho}
/// with the e^{-beta_k mu} shift factor folded into the weights.
struct GaussKernelCoeffs {
  std::vector<std::pair<double, double>> terms;  // (a_k, beta_k), beta decreasing
  double mu = 0.0;

  double eval(double rho) const;
};

GaussKernelCoeffs to_gauss_kernel(const ExpSumApprox& approx, double mu);

}  // namespace hdlap
