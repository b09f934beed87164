#include "hdlap/expsum.hpp"

#include <cmath>

#include "hdlap/errors.hpp"

namespace hdlap {

double ExpSumApprox::window(double s) const {
  double acc = 0.0;
  for (int k = k1; k <= k2; ++k) {
    double u = s - k * h;
    double e = std::exp(u);  // overflows to inf for large u; exp(-inf) = 0
    acc += std::exp(u - e);
  }
  return h * acc;
}

double ExpSumApprox::eval(double r) const {
  if (!(r > 0.0)) throw InfeasibleError("ExpSumApprox::eval: r must be positive");
  const double sc = scale();
  const double rb = r / sc;
  if (rb > 1.0) return window(std::log(rb)) / r;
  double acc = 0.0;
  for (int k = k1; k <= k2; ++k) {
    double w = std::exp(-k * h);
    acc += w * std::exp(-w * rb);
  }
  return h * acc / sc;
}

ExpSumApprox build_expsum(double h, int k1, int k2) {
  if (!(h > 0.0)) throw InfeasibleError("build_expsum: h must be positive");
  if (k1 > k2) throw InfeasibleError("build_expsum: k1 <= k2 required");
  return ExpSumApprox{h, k1, k2, 0.0};
}

ExpSumApprox rescale_to_mu(const ExpSumApprox& approx, double mu) {
  if (!(mu > 0.0)) throw InfeasibleError("rescale_to_mu: mu must be positive");
  ExpSumApprox out = approx;
  out.mu = mu;
  return out;
}

ScanResult relative_error_scan(const ExpSumApprox& approx, double r_lo, double r_hi,
                               std::int64_t points) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo))
    throw InfeasibleError("relative_error_scan: need 0 < r_lo < r_hi");
  if (points < 2) throw InfeasibleError("relative_error_scan: points >= 2 required");
  const double s_lo = std::log(r_lo), s_hi = std::log(r_hi);
  const double sc = approx.scale();
  ScanResult res;
  res.min_signed = std::numeric_limits<double>::infinity();
  res.max_signed = -std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < points; ++i) {
    double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    // v(r) * r - 1 evaluated as phi(ln(r/scale)) - 1.
    double dev = approx.window(s - std::log(sc)) - 1.0;
    if (std::fabs(dev) > res.max_abs) {
      res.max_abs = std::fabs(dev);
      res.arg_max = std::exp(s);
    }
    res.max_signed = std::max(res.max_signed, dev);
    res.min_signed = std::min(res.min_signed, dev);
  }
  return res;
}

double predicted_relative_error(double h) {
  if (!(h > 0.0)) throw InfeasibleError("predicted_relative_error: h must be positive");
  return 4.0 * M_PI / std::sqrt(h) * std::exp(-M_PI * M_PI / h);
}

double GaussKernelCoeffs::eval(double rho) const {
  double acc = 0.0;
  for (const auto& [a, beta] : terms) acc += a * std::exp(-beta * rho);
  return acc;
}

GaussKernelCoeffs to_gauss_kernel(const ExpSumApprox& approx, double mu) {
  if (mu < 0.0) throw InfeasibleError("to_gauss_kernel: mu must be nonnegative");
  GaussKernelCoeffs out;
  out.mu = mu;
  const double sc = approx.scale();
  out.terms.reserve(static_cast<std::size_t>(approx.k2 - approx.k1) + 1);
  for (int k = approx.k1; k <= approx.k2; ++k) {
    double beta = std::exp(-k * approx.h) / sc;
    double a = approx.h * std::exp(-k * approx.h) / sc * std::exp(-beta * mu);
    out.terms.emplace_back(a, beta);
  }
  return out;
}

}  // namespace hdlap
