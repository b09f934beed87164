#include "hdlap/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "hdlap/errors.hpp"
#include "hdlap/special.hpp"

namespace hdlap {

std::vector<double> mk_normal(double sigma, int K) {
  return OrthogonalFamily::hermite(sigma, K).mk();
}

std::vector<double> mk_beta(double alpha, double beta, int K) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw InfeasibleError("mk_beta: parameters must be positive");
  if (K < 0 || K > 64) throw InfeasibleError("mk_beta: K in [0, 64] required");
  const double a = beta - 1.0, b = alpha - 1.0;
  std::vector<double> out(static_cast<std::size_t>(K) + 1);
  double p_sq = 1.0;  // p_0(0)^2
  double acc = 1.0;
  out[0] = 1.0;
  for (int k = 0; k < K; ++k) {
    double kk = k;
    p_sq *= (kk + b + 1.0) * (kk + a + b + 1.0) * (2.0 * kk + a + b + 3.0) /
            ((kk + 1.0) * (kk + a + 1.0) * (2.0 * kk + a + b + 1.0));
    acc += p_sq;
    out[static_cast<std::size_t>(k) + 1] = 1.0 / acc;
  }
  return out;
}

double beta_p0_squared_closed(double alpha, double beta, int k) {
  const double a = beta - 1.0, b = alpha - 1.0, kk = k;
  return std::exp(std::log(2.0 * kk + a + b + 1.0) + log_gamma(a + 1.0) +
                  log_gamma(kk + b + 1.0) + log_gamma(kk + a + b + 1.0) - log_gamma(a + b + 2.0) -
                  log_gamma(b + 1.0) - log_gamma(kk + 1.0) - log_gamma(kk + a + 1.0));
}

RateSchedule RateSchedule::basic(double theta, int K) {
  if (!(theta > 0.0)) throw InfeasibleError("RateSchedule::basic: theta must be positive");
  RateSchedule s;
  s.kind_ = Kind::basic;
  s.theta_ = theta;
  s.kmax_ = K;
  return s;
}

RateSchedule RateSchedule::chebyshev(double rho, double spectral_norm_sq, int K) {
  if (!(rho > 0.0 && rho < 1.0))
    throw InfeasibleError("RateSchedule::chebyshev: rho must lie in (0, 1)");
  const double a = 1.0 - rho, b = spectral_norm_sq;
  if (!(b > a)) throw InfeasibleError("RateSchedule::chebyshev: requires spectral_norm_sq > 1 - rho");
  RateSchedule s;
  s.kind_ = Kind::chebyshev;
  s.kmax_ = K;
  s.a_ = a;
  s.b_ = b;
  s.kappa_ = b / a;
  s.r_ = (std::sqrt(s.kappa_) - 1.0) / (std::sqrt(s.kappa_) + 1.0);
  return s;
}

RateSchedule RateSchedule::optimal(OrthogonalFamily family) {
  RateSchedule s;
  s.kind_ = Kind::optimal;
  s.kmax_ = family.kmax();
  s.mk_ = family.mk();
  s.mk_log_ = family.mk_log();
  s.family_ = std::make_shared<OrthogonalFamily>(std::move(family));
  return s;
}

namespace {

double chebyshev_t(int k, double y) {
  if (k == 0) return 1.0;
  double prev = 1.0, cur = y;
  for (int j = 1; j < k; ++j) {
    double next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double RateSchedule::eval(int k, double lambda) const {
  if (k < 0 || k > kmax_) throw std::invalid_argument("RateSchedule::eval: k out of range");
  switch (kind_) {
    case Kind::basic:
      return std::pow(1.0 - theta_ * lambda, k);
    case Kind::chebyshev: {
      // Recurrence on the transformed argument; valid far outside [-1, 1],
      // in particular at lambda = 0 where numerator and denominator agree.
      double y = (b_ + a_ - 2.0 * lambda) / (b_ - a_);
      double c = (b_ + a_) / (b_ - a_);
      return chebyshev_t(k, y) / chebyshev_t(k, c);
    }
    case Kind::optimal: {
      const auto& p0 = family_->p_at_zero();
      const double log_mk = mk_log_[static_cast<std::size_t>(k)];
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) {
        const SignedLog& pj0 = p0[static_cast<std::size_t>(j)];
        if (pj0.sign == 0) continue;
        SignedLog pjt = family_->p_scaled(j, lambda);
        if (pjt.sign == 0) continue;
        acc += pj0.sign * pjt.sign * std::exp(log_mk + pj0.log_abs + pjt.log_abs);
      }
      return acc;
    }
  }
  return 0.0;
}

void RateSchedule::eval_all(double lambda, std::vector<double>& out) const {
  out.resize(static_cast<std::size_t>(kmax_) + 1);
  switch (kind_) {
    case Kind::basic: {
      double fac = 1.0 - theta_ * lambda, cur = 1.0;
      for (int k = 0; k <= kmax_; ++k) {
        out[static_cast<std::size_t>(k)] = cur;
        cur *= fac;
      }
      return;
    }
    case Kind::chebyshev: {
      double y = (b_ + a_ - 2.0 * lambda) / (b_ - a_);
      double c = (b_ + a_) / (b_ - a_);
      double ny_prev = 1.0, ny = y, nc_prev = 1.0, nc = c;
      out[0] = 1.0;
      for (int k = 1; k <= kmax_; ++k) {
        out[static_cast<std::size_t>(k)] = ny / nc;
        double ny_next = 2.0 * y * ny - ny_prev;
        double nc_next = 2.0 * c * nc - nc_prev;
        ny_prev = ny;
        ny = ny_next;
        nc_prev = nc;
        nc = nc_next;
      }
      return;
    }
    case Kind::optimal: {
      auto pt = family_->p_all_scaled(lambda);
      const auto& p0 = family_->p_at_zero();
      // Running value T_k = M_k * sum_{j<=k} p_j(0) p_j(t). Each update
      // rescales the partial sum by M_k/M_{k-1} and adds the k-th term with
      // M_k already folded in, keeping every intermediate on the scale of
      // the result.
      double cur = 0.0;
      for (int k = 0; k <= kmax_; ++k) {
        const SignedLog& a = p0[static_cast<std::size_t>(k)];
        const SignedLog& b = pt[static_cast<std::size_t>(k)];
        const double log_mk = mk_log_[static_cast<std::size_t>(k)];
        if (k > 0) cur *= std::exp(log_mk - mk_log_[static_cast<std::size_t>(k) - 1]);
        if (a.sign != 0 && b.sign != 0)
          cur += a.sign * b.sign * std::exp(log_mk + a.log_abs + b.log_abs);
        out[static_cast<std::size_t>(k)] = cur;
      }
      return;
    }
  }
}

const std::vector<double>& RateSchedule::mk() const {
  if (kind_ != Kind::optimal)
    throw std::logic_error("RateSchedule::mk: defined for optimal schedules only");
  return mk_;
}

double RateSchedule::bound_proof(int k) const {
  if (kind_ != Kind::chebyshev) throw std::logic_error("bound_proof: chebyshev schedules only");
  double rk = std::pow(r_, k);
  return 2.0 * rk / (1.0 + 2.0 * rk * rk);
}

double RateSchedule::bound_classical(int k) const {
  if (kind_ != Kind::chebyshev) throw std::logic_error("bound_classical: chebyshev schedules only");
  double rk = std::pow(r_, k);
  return 2.0 * rk / (1.0 + rk * rk);
}

double prefactor_quadrature(const RateSchedule& schedule, const DensityModel& model, int k) {
  if (k < 0 || k > schedule.kmax())
    throw std::invalid_argument("prefactor_quadrature: k out of range");
  auto p_sq = [&](double t) {
    double p = schedule.eval(k, t);
    return p * p;
  };
  if (const auto* nm = model.as_normal()) {
    GaussRule rule = gauss_hermite_prob(2 * k + 8);
    const double sigma = std::sqrt(nm->v);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * p_sq(nm->e + sigma * rule.nodes[i]);
    return acc;
  }
  if (const auto* bm = model.as_beta()) {
    GaussRule rule = gauss_jacobi(2 * k + 8, bm->beta - 1.0, bm->alpha - 1.0);
    const double scale = bm->rescaled ? bm->alpha / (bm->alpha + bm->beta) : 1.0;
    double mass = 0.0, acc = 0.0;
    for (double w : rule.weights) mass += w;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * p_sq((1.0 + rule.nodes[i]) / (2.0 * scale));
    return acc / mass;
  }
  const auto* em = model.as_empirical();
  double acc = 0.0;
  for (double t : em->values) acc += p_sq(t);
  return acc / static_cast<double>(em->values.size());
}

}  // namespace hdlap
