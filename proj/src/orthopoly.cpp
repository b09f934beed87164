#include "hdlap/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

#include "hdlap/errors.hpp"

namespace hdlap {

double hermite_he(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_he: k >= 0 required");
  if (k == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int j = 1; j < k; ++j) {
    double next = x * cur - j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<SignedLog> hermite_he_scaled(int kmax, double x) {
  std::vector<SignedLog> out(static_cast<std::size_t>(kmax) + 1);
  out[0] = SignedLog{0.0, 1};
  if (kmax == 0) return out;
  // prev/cur are He values divided by 2^exponent; renormalized whenever the
  // magnitude passes 2^500.
  double prev = 1.0, cur = x;
  long exponent = 0;
  const double big = 0x1.0p500, shrink = 0x1.0p-500;
  out[1] = SignedLog::from(x);
  for (int j = 1; j < kmax; ++j) {
    double next = x * cur - static_cast<double>(j) * prev;
    prev = cur;
    cur = next;
    if (std::fabs(cur) > big) {
      cur *= shrink;
      prev *= shrink;
      exponent += 500;
    }
    if (cur == 0.0) {
      out[static_cast<std::size_t>(j) + 1] = SignedLog::zero();
    } else {
      out[static_cast<std::size_t>(j) + 1] =
          SignedLog{std::log(std::fabs(cur)) + exponent * M_LN2, cur > 0.0 ? 1 : -1};
    }
  }
  return out;
}

double jacobi_p(int k, double a, double b, double x) {
  if (k < 0) throw std::invalid_argument("jacobi_p: k >= 0 required");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("jacobi_p: a, b > -1 required");
  if (k == 0) return 1.0;
  double p_prev = 1.0;
  double p_cur = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int j = 2; j <= k; ++j) {
    double jj = j;
    double c1 = 2.0 * jj * (jj + a + b) * (2.0 * jj + a + b - 2.0);
    double c2 = (2.0 * jj + a + b - 1.0) *
                ((2.0 * jj + a + b) * (2.0 * jj + a + b - 2.0) * x + a * a - b * b);
    double c3 = 2.0 * (jj + a - 1.0) * (jj + b - 1.0) * (2.0 * jj + a + b);
    double p_next = (c2 * p_cur - c3 * p_prev) / c1;
    p_prev = p_cur;
    p_cur = p_next;
  }
  return p_cur;
}

namespace {

// log K(k,a,b) of the Jacobi orthogonality constant
// int P_k^2 (1-x)^a (1+x)^b dx = K(k,a,b).
double log_jacobi_k(int k, double a, double b) {
  double kk = k;
  return (a + b + 1.0) * M_LN2 + log_gamma(kk + a + 1.0) + log_gamma(kk + b + 1.0) -
         std::log(2.0 * kk + a + b + 1.0) - log_gamma(kk + 1.0) - log_gamma(kk + a + b + 1.0);
}

}  // namespace

OrthogonalFamily OrthogonalFamily::hermite(double sigma, int kmax) {
  if (!(sigma > 0.0)) throw InfeasibleError("OrthogonalFamily: sigma must be positive");
  if (kmax < 0 || kmax > 64) throw InfeasibleError("OrthogonalFamily: kmax in [0, 64] required");
  OrthogonalFamily f;
  f.hermite_ = true;
  f.sigma_ = sigma;
  f.kmax_ = kmax;
  // p_k(0) = He_k(-1/sigma) / sqrt(k!)
  auto he = hermite_he_scaled(kmax, -1.0 / sigma);
  f.p0_.resize(he.size());
  for (int k = 0; k <= kmax; ++k) {
    SignedLog v = he[static_cast<std::size_t>(k)];
    if (v.sign != 0) v.log_abs -= 0.5 * log_gamma(static_cast<double>(k) + 1.0);
    f.p0_[static_cast<std::size_t>(k)] = v;
  }
  return f;
}

OrthogonalFamily OrthogonalFamily::jacobi(double alpha, double beta, bool rescaled, int kmax) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw InfeasibleError("OrthogonalFamily: alpha, beta must be positive");
  if (kmax < 0 || kmax > 64) throw InfeasibleError("OrthogonalFamily: kmax in [0, 64] required");
  OrthogonalFamily f;
  f.hermite_ = false;
  f.alpha_ = alpha;
  f.beta_ = beta;
  f.rescaled_ = rescaled;
  f.kmax_ = kmax;
  const double a = beta - 1.0, b = alpha - 1.0;
  f.jacobi_log_norm_.resize(static_cast<std::size_t>(kmax) + 1);
  const double log_k0 = log_jacobi_k(0, a, b);
  for (int k = 0; k <= kmax; ++k)
    f.jacobi_log_norm_[static_cast<std::size_t>(k)] = 0.5 * (log_k0 - log_jacobi_k(k, a, b));
  // P_k^{(a,b)}(-1) = (-1)^k Gamma(k+b+1) / (Gamma(k+1) Gamma(b+1))
  f.p0_.resize(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    double log_abs = log_gamma(static_cast<double>(k) + b + 1.0) -
                     log_gamma(static_cast<double>(k) + 1.0) - log_gamma(b + 1.0) +
                     f.jacobi_log_norm_[static_cast<std::size_t>(k)];
    f.p0_[static_cast<std::size_t>(k)] = SignedLog{log_abs, (k % 2 == 0) ? 1 : -1};
  }
  return f;
}

SignedLog OrthogonalFamily::p_scaled(int k, double t) const {
  if (k < 0 || k > kmax_) throw std::invalid_argument("OrthogonalFamily::p: k out of range");
  if (hermite_) {
    auto he = hermite_he_scaled(k, (t - 1.0) / sigma_);
    SignedLog v = he[static_cast<std::size_t>(k)];
    if (v.sign != 0) v.log_abs -= 0.5 * log_gamma(static_cast<double>(k) + 1.0);
    return v;
  }
  const double a = beta_ - 1.0, b = alpha_ - 1.0;
  const double scale = rescaled_ ? alpha_ / (alpha_ + beta_) : 1.0;
  const double x = 2.0 * scale * t - 1.0;
  double raw = jacobi_p(k, a, b, x);
  SignedLog v = SignedLog::from(raw);
  if (v.sign != 0) v.log_abs += jacobi_log_norm_[static_cast<std::size_t>(k)];
  return v;
}

std::vector<SignedLog> OrthogonalFamily::p_all_scaled(double t) const {
  if (hermite_) {
    auto vals = hermite_he_scaled(kmax_, (t - 1.0) / sigma_);
    for (int k = 1; k <= kmax_; ++k) {
      auto& v = vals[static_cast<std::size_t>(k)];
      if (v.sign != 0) v.log_abs -= 0.5 * log_gamma(static_cast<double>(k) + 1.0);
    }
    return vals;
  }
  const double a = beta_ - 1.0, b = alpha_ - 1.0;
  const double scale = rescaled_ ? alpha_ / (alpha_ + beta_) : 1.0;
  const double x = 2.0 * scale * t - 1.0;
  std::vector<SignedLog> vals(static_cast<std::size_t>(kmax_) + 1);
  double p_prev = 1.0, p_cur = 0.5 * ((a + b + 2.0) * x + (a - b));
  vals[0] = SignedLog{0.0, 1};
  for (int k = 1; k <= kmax_; ++k) {
    if (k >= 2) {
      double jj = k;
      double c1 = 2.0 * jj * (jj + a + b) * (2.0 * jj + a + b - 2.0);
      double c2 = (2.0 * jj + a + b - 1.0) *
                  ((2.0 * jj + a + b) * (2.0 * jj + a + b - 2.0) * x + a * a - b * b);
      double c3 = 2.0 * (jj + a - 1.0) * (jj + b - 1.0) * (2.0 * jj + a + b);
      double p_next = (c2 * p_cur - c3 * p_prev) / c1;
      p_prev = p_cur;
      p_cur = p_next;
    }
    SignedLog v = SignedLog::from(p_cur);
    if (v.sign != 0) v.log_abs += jacobi_log_norm_[static_cast<std::size_t>(k)];
    vals[static_cast<std::size_t>(k)] = v;
  }
  return vals;
}

std::vector<double> OrthogonalFamily::mk() const {
  auto logs = mk_log();
  std::vector<double> out(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) out[i] = std::exp(logs[i]);
  return out;
}

std::vector<double> OrthogonalFamily::mk_log() const {
  std::vector<double> out(static_cast<std::size_t>(kmax_) + 1);
  LogSumExp acc;
  for (int k = 0; k <= kmax_; ++k) {
    const SignedLog& p0 = p0_[static_cast<std::size_t>(k)];
    if (p0.sign != 0) acc.add(2.0 * p0.log_abs);
    out[static_cast<std::size_t>(k)] = -acc.value();
  }
  return out;
}

DensityModel OrthogonalFamily::weight() const {
  if (hermite_) return DensityModel(NormalModel{1.0, sigma_ * sigma_});
  return DensityModel(BetaModel{alpha_, beta_, rescaled_});
}

GaussRule OrthogonalFamily::weighted_rule(int points) const {
  if (hermite_) {
    GaussRule rule = gauss_hermite_prob(points);
    for (auto& x : rule.nodes) x = 1.0 + sigma_ * x;
    return rule;
  }
  const double a = beta_ - 1.0, b = alpha_ - 1.0;
  GaussRule rule = gauss_jacobi(points, a, b);
  const double scale = rescaled_ ? alpha_ / (alpha_ + beta_) : 1.0;
  double mass = 0.0;
  for (double w : rule.weights) mass += w;
  for (auto& x : rule.nodes) x = (1.0 + x) / (2.0 * scale);
  for (auto& w : rule.weights) w /= mass;
  return rule;
}

}  // namespace hdlap
