#pragma once

namespace hdlap {

/// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
double log_gamma(double x);

/// log Beta(a, b) = log Gamma(a) + log Gamma(b) - log Gamma(a+b).
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b), a, b > 0, 0 <= x <= 1.
/// Continued fraction (modified Lentz) with the symmetry switch at
/// x = (a+1)/(a+b+2); stable up to parameters of order 10^3 and beyond.
double inc_beta(double a, double b, double x);

/// Standard normal CDF via erfc (no cancellation in the tails).
double normal_cdf(double x);

/// Numerically safe log(sum of exponentials) accumulator.
class LogSumExp {
 public:
  void add(double log_term);
  double value() const;  // log of the running sum; -inf if empty

 private:
  double max_ = 0.0;
  double sum_ = 0.0;  // sum of exp(term - max_)
  bool empty_ = true;
};

/// Value carried as sign * exp(log_abs); exact zero has sign 0.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 0;

  static SignedLog zero() { return {0.0, 0}; }
  static SignedLog from(double v);
  double to_double() const;
};

}  // namespace hdlap
