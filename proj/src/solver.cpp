#include "hdlap/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "hdlap/errors.hpp"
#include "hdlap/parallel.hpp"
#include "hdlap/quadrature.hpp"
#include "hdlap/rng.hpp"
#include "hdlap/special.hpp"

namespace hdlap {

namespace {

constexpr std::int64_t kChunk = 1 << 14;
constexpr double kKernelCutoff = 1e-14;  // ||T^t eta||^2 below this counts as kernel-adjacent

double log_sphere_area(std::int64_t n) {
  // n nu_n = 2 pi^{n/2} / Gamma(n/2)
  const double nd = static_cast<double>(n);
  return M_LN2 + 0.5 * nd * std::log(M_PI) - log_gamma(0.5 * nd);
}

}  // namespace

RhsModel RhsModel::gaussian_radial(double gamma) {
  if (!(gamma > 0.0)) throw InfeasibleError("RhsModel: gamma must be positive");
  RhsModel m;
  m.kind = Kind::gaussian_radial;
  m.gamma = gamma;
  m.envelope_gamma = gamma;
  return m;
}

RhsModel RhsModel::separable_gaussian(Eigen::VectorXd gammas) {
  for (Eigen::Index i = 0; i < gammas.size(); ++i)
    if (!(gammas(i) > 0.0)) throw InfeasibleError("RhsModel: gammas must be positive");
  RhsModel m;
  m.kind = Kind::separable_gaussian;
  m.gammas = std::move(gammas);
  return m;
}

RhsModel RhsModel::callable(std::function<double(double, const Eigen::VectorXd&)> profile,
                            double envelope_gamma) {
  if (!(envelope_gamma > 0.0)) throw InfeasibleError("RhsModel: envelope_gamma must be positive");
  RhsModel m;
  m.kind = Kind::callable;
  m.profile = std::move(profile);
  m.envelope_gamma = envelope_gamma;
  return m;
}

double RhsModel::direction_gamma(const Eigen::VectorXd& eta) const {
  switch (kind) {
    case Kind::gaussian_radial:
      return gamma;
    case Kind::separable_gaussian: {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < eta.size(); ++i) acc += gammas(i) * eta(i) * eta(i);
      return acc;
    }
    case Kind::callable:
      return envelope_gamma;
  }
  return gamma;
}

double symbol_eval(const EmbeddingMatrix& em, const Eigen::VectorXd& omega) {
  if (omega.size() != em.n) throw std::invalid_argument("symbol_eval: dimension mismatch");
  return (em.T.transpose() * omega).squaredNorm();
}

double error_multiplier(const RateSchedule& schedule, int k, const EmbeddingMatrix& em, double mu,
                        const Eigen::VectorXd& omega) {
  if (mu < 0.0) throw InfeasibleError("error_multiplier: mu must be nonnegative");
  const double norm_sq = omega.squaredNorm();
  if (mu == 0.0 && norm_sq == 0.0)
    throw InfeasibleError("error_multiplier: omega = 0 needs mu > 0");
  const double t = symbol_eval(em, omega);
  return schedule.eval(k, (t + mu) / (norm_sq + mu));
}

namespace {

struct Accumulators {
  // Per k: sums of R, R^2, R^4 over used directions.
  std::vector<double> s1, s2, s4;
  double tail1 = 0.0, tail2 = 0.0;  // low-argument part of the k = 0 factor
  std::int64_t used = 0;
  std::int64_t excluded = 0;

  explicit Accumulators(int kk)
      : s1(static_cast<std::size_t>(kk) + 1, 0.0),
        s2(static_cast<std::size_t>(kk) + 1, 0.0),
        s4(static_cast<std::size_t>(kk) + 1, 0.0) {}

  void merge(const Accumulators& o) {
    for (std::size_t i = 0; i < s1.size(); ++i) {
      s1[i] += o.s1[i];
      s2[i] += o.s2[i];
      s4[i] += o.s4[i];
    }
    tail1 += o.tail1;
    tail2 += o.tail2;
    used += o.used;
    excluded += o.excluded;
  }
};

struct RadialCtx {
  const EmbeddingMatrix* em;
  const RhsModel* rhs;
  bool resolvent;
  const RateSchedule* schedule;  // nullptr: multiplier identically one, K = 0
  int K;
  double mu;
  double s;
  double log_ang;        // log(n nu_n)
  double tail_a = -1.0;  // >= 0: also accumulate the low-argument norm part
  GaussRule gl_full;     // nu = (s+n)/2 - 1, normalized weights
  GaussRule gl_reduced;  // nu = (s+n-2)/2 - 1, normalized (mu = 0 resolvent)
};

GaussRule normalized_laguerre(int points, double nu) {
  GaussRule rule = gauss_laguerre(points, nu);
  double mass = 0.0;
  for (double w : rule.weights) mass += w;
  for (auto& w : rule.weights) w /= mass;
  return rule;
}

// Closed-form log of n nu_n * int e^{-gamma r^2} r^{p-1} dr
//   = log_ang + log Gamma(p/2) - log 2 - (p/2) log gamma.
double log_gauss_radial(const RadialCtx& ctx, double p, double gamma) {
  return ctx.log_ang + log_gamma(0.5 * p) - M_LN2 - 0.5 * p * std::log(gamma);
}

// Fills rk[k] = n nu_n * int |P_k(lambda(r))| |U^(r eta)| r^{s+n-1} dr for
// k = 0..K, and tail = the same k = 0 integral restricted to multiplier
// arguments below ctx.tail_a. Returns false when the direction is excluded
// (kernel-adjacent).
bool direction_factors(const RadialCtx& ctx, double t, const Eigen::VectorXd& eta,
                       std::vector<double>& rk, double& tail, std::vector<double>& mult) {
  const double nd = static_cast<double>(ctx.em->n);
  const double q = ctx.s + nd;
  const double gamma_dir = ctx.rhs->direction_gamma(eta);
  const bool gaussian = ctx.rhs->kind != RhsModel::Kind::callable;
  rk.assign(static_cast<std::size_t>(ctx.K) + 1, 0.0);
  tail = 0.0;

  auto eval_mult = [&](double lambda) {
    if (ctx.schedule == nullptr) {
      mult.assign(1, 1.0);
    } else {
      ctx.schedule->eval_all(lambda, mult);
    }
  };

  if (ctx.mu == 0.0) {
    if (ctx.resolvent && t < kKernelCutoff) return false;
    eval_mult(t);
    double log_base;
    double gl_extra = 1.0;
    if (ctx.resolvent) {
      log_base = log_gauss_radial(ctx, q - 2.0, gamma_dir) - std::log(t);
      if (!gaussian) {
        gl_extra = ctx.gl_reduced.apply([&](double u) {
          double r = std::sqrt(u / gamma_dir);
          return ctx.rhs->profile(r, eta) * std::exp(u);
        });
      }
    } else {
      log_base = log_gauss_radial(ctx, q, gamma_dir);
      if (!gaussian) {
        gl_extra = ctx.gl_full.apply([&](double u) {
          double r = std::sqrt(u / gamma_dir);
          return ctx.rhs->profile(r, eta) * std::exp(u);
        });
      }
    }
    const double base = std::exp(log_base) * gl_extra;
    for (int k = 0; k <= ctx.K; ++k)
      rk[static_cast<std::size_t>(k)] = std::fabs(mult[static_cast<std::size_t>(k)]) * base;
    if (ctx.tail_a >= 0.0 && t < ctx.tail_a) tail = base;
    return true;
  }

  // mu > 0: the multiplier varies along the ray; generalized Gauss-Laguerre
  // in u = gamma r^2 with the Gaussian envelope as weight.
  const double log_base = log_gauss_radial(ctx, q, gamma_dir);
  const double base = std::exp(log_base);
  for (std::size_t i = 0; i < ctx.gl_full.nodes.size(); ++i) {
    const double u = ctx.gl_full.nodes[i];
    const double w = ctx.gl_full.weights[i];
    const double r_sq = u / gamma_dir;
    const double lambda = (r_sq * t + ctx.mu) / (r_sq + ctx.mu);
    eval_mult(lambda);
    double point = 1.0;
    if (ctx.resolvent) point /= r_sq * t + ctx.mu;
    if (!gaussian) point *= ctx.rhs->profile(std::sqrt(r_sq), eta) * std::exp(u);
    for (int k = 0; k <= ctx.K; ++k)
      rk[static_cast<std::size_t>(k)] +=
          w * std::fabs(mult[static_cast<std::size_t>(k)]) * point;
    if (ctx.tail_a >= 0.0 && lambda < ctx.tail_a) tail += w * point;
  }
  for (int k = 0; k <= ctx.K; ++k) rk[static_cast<std::size_t>(k)] *= base;
  tail *= base;
  return true;
}

Accumulators run_ensemble(const RadialCtx& ctx, const FrequencyEnsemble& ens) {
  const std::int64_t n_chunks = (ens.count + kChunk - 1) / kChunk;
  std::vector<Accumulators> per_chunk(static_cast<std::size_t>(n_chunks), Accumulators(ctx.K));
  Rng root(ens.seed);
  for_each_chunk(ens.count, kChunk, ens.threads,
                 [&](std::int64_t chunk, std::int64_t, std::int64_t cnt) {
                   Rng rng = root.stream(static_cast<std::uint64_t>(chunk));
                   Accumulators& acc = per_chunk[static_cast<std::size_t>(chunk)];
                   Eigen::VectorXd z(ens.n), eta(ens.n);
                   std::vector<double> rk, mult;
                   double tail = 0.0;
                   for (std::int64_t i = 0; i < cnt; ++i) {
                     double norm_sq;
                     do {
                       norm_sq = 0.0;
                       for (std::int64_t j = 0; j < ens.n; ++j) {
                         z(j) = rng.normal();
                         norm_sq += z(j) * z(j);
                       }
                     } while (norm_sq == 0.0);
                     eta = z / std::sqrt(norm_sq);
                     const double t = (ctx.em->T.transpose() * eta).squaredNorm();
                     if (!direction_factors(ctx, t, eta, rk, tail, mult)) {
                       ++acc.excluded;
                       continue;
                     }
                     ++acc.used;
                     for (int k = 0; k <= ctx.K; ++k) {
                       const double r = rk[static_cast<std::size_t>(k)];
                       const double r2 = r * r;
                       acc.s1[static_cast<std::size_t>(k)] += r;
                       acc.s2[static_cast<std::size_t>(k)] += r2;
                       acc.s4[static_cast<std::size_t>(k)] += r2 * r2;
                     }
                     acc.tail1 += tail;
                     acc.tail2 += tail * tail;
                   }
                 });
  Accumulators total(ctx.K);
  for (const auto& c : per_chunk) total.merge(c);
  return total;
}

RadialCtx make_ctx(const EmbeddingMatrix& em, double mu, const RhsModel& rhs, bool resolvent,
                   const RateSchedule* schedule, int K, double s, int radial_points) {
  if (mu < 0.0) throw InfeasibleError("solver: mu must be nonnegative");
  if (s < 0.0) throw InfeasibleError("solver: s must be nonnegative");
  RadialCtx ctx;
  ctx.em = &em;
  ctx.rhs = &rhs;
  ctx.resolvent = resolvent;
  ctx.schedule = schedule;
  ctx.K = schedule ? K : 0;
  ctx.mu = mu;
  ctx.s = s;
  ctx.log_ang = log_sphere_area(em.n);
  const double q = s + static_cast<double>(em.n);
  const bool need_full = (mu > 0.0) || (rhs.kind == RhsModel::Kind::callable && !resolvent);
  const bool need_reduced = (mu == 0.0) && resolvent && rhs.kind == RhsModel::Kind::callable;
  if (need_full) ctx.gl_full = normalized_laguerre(radial_points, 0.5 * q - 1.0);
  if (need_reduced) ctx.gl_reduced = normalized_laguerre(radial_points, 0.5 * (q - 2.0) - 1.0);
  return ctx;
}

}  // namespace

NormEstimate norm_eval(const FieldSpec& field, const EmbeddingMatrix& em, double mu, double s,
                       const FrequencyEnsemble& ensemble, NormKind which) {
  if (field.resolvent && mu == 0.0) {
    if (em.m < 3)
      throw InfeasibleError("norm_eval: the 1/||T^t eta||^2 angular weight is integrable "
                            "only for m >= 3");
    if (which == NormKind::mixed && em.m < 5)
      throw InfeasibleError("norm_eval: the squared angular weight needs m >= 5");
  }
  RadialCtx ctx =
      make_ctx(em, mu, field.rhs, field.resolvent, nullptr, 0, s, ensemble.radial_points);
  Accumulators acc = run_ensemble(ctx, ensemble);
  if (acc.used == 0) throw InfeasibleError("norm_eval: all directions excluded");
  const double n = static_cast<double>(acc.used);
  NormEstimate est;
  if (which == NormKind::barron) {
    est.mean = acc.s1[0] / n;
    double var = std::max(0.0, acc.s2[0] / n - est.mean * est.mean);
    est.se = std::sqrt(var / n);
    est.value = est.mean;
  } else {
    est.mean = acc.s2[0] / n;
    double var = std::max(0.0, acc.s4[0] / n - est.mean * est.mean);
    est.se = std::sqrt(var / n);
    est.value = std::sqrt(est.mean);
  }
  return est;
}

IterationRun run_iteration(const EmbeddingMatrix& em, double mu, const RhsModel& rhs,
                           const RateSchedule& schedule, const FrequencyEnsemble& ensemble,
                           double s, int K) {
  if (K < 0 || K > schedule.kmax())
    throw InfeasibleError("run_iteration: K must not exceed the schedule degree");
  if (ensemble.n != em.n) throw InfeasibleError("run_iteration: ensemble dimension mismatch");
  if (mu == 0.0 && em.m < 3)
    throw InfeasibleError("run_iteration: mu = 0 requires m >= 3 (angular integrability)");

  RadialCtx ctx = make_ctx(em, mu, rhs, /*resolvent=*/true, &schedule, K, s, ensemble.radial_points);
  if (schedule.kind() == RateSchedule::Kind::chebyshev) ctx.tail_a = schedule.interval_lo();
  Accumulators acc = run_ensemble(ctx, ensemble);
  if (acc.used == 0) throw InfeasibleError("run_iteration: all directions excluded");

  IterationRun run;
  run.mu = mu;
  run.s = s;
  run.seed = ensemble.seed;
  run.directions = ensemble.count;
  run.excluded = acc.excluded;
  run.exclusion_warning =
      static_cast<double>(acc.excluded) > 1e-4 * static_cast<double>(ensemble.count);
  run.mixed_valid = !(mu == 0.0 && em.m < 5);

  const double n = static_cast<double>(acc.used);
  run.barron_error.resize(static_cast<std::size_t>(K) + 1);
  run.barron_se.resize(static_cast<std::size_t>(K) + 1);
  if (run.mixed_valid) {
    run.mixed_sq_error.resize(static_cast<std::size_t>(K) + 1);
    run.mixed_sq_se.resize(static_cast<std::size_t>(K) + 1);
  }
  for (int k = 0; k <= K; ++k) {
    auto kk = static_cast<std::size_t>(k);
    double mean = acc.s1[kk] / n;
    double var = std::max(0.0, acc.s2[kk] / n - mean * mean);
    run.barron_error[kk] = mean;
    run.barron_se[kk] = std::sqrt(var / n);
    if (run.mixed_valid) {
      double mean2 = acc.s2[kk] / n;
      double var2 = std::max(0.0, acc.s4[kk] / n - mean2 * mean2);
      run.mixed_sq_error[kk] = mean2;
      run.mixed_sq_se[kk] = std::sqrt(var2 / n);
    }
  }
  run.barron_norm_u = run.barron_error[0];
  if (run.mixed_valid) run.mixed_sq_norm_u = run.mixed_sq_error[0];
  if (ctx.tail_a >= 0.0) {
    run.tail_norm = acc.tail1 / n;
    double var = std::max(0.0, acc.tail2 / n - run.tail_norm * run.tail_norm);
    run.tail_norm_se = std::sqrt(var / n);
  }
  if (schedule.kind() == RateSchedule::Kind::optimal) {
    run.predicted_mk.assign(schedule.mk().begin(),
                            schedule.mk().begin() + static_cast<std::ptrdiff_t>(K) + 1);
  }
  return run;
}

std::vector<ResidualEstimate> residual_probe(const EmbeddingMatrix& em, double mu,
                                             const RhsModel& rhs, const RateSchedule& schedule,
                                             int k, const GaussKernelCoeffs* kernel,
                                             const std::vector<Eigen::VectorXd>& points,
                                             std::int64_t quad_count, std::uint64_t seed) {
  if (!(mu > 0.0)) throw InfeasibleError("residual_probe: mu must be positive");
  if (rhs.kind == RhsModel::Kind::callable)
    throw InfeasibleError("residual_probe: needs a separable or radial Gaussian right-hand side");
  if (k < 0 || k > schedule.kmax())
    throw InfeasibleError("residual_probe: k must not exceed the schedule degree");

  const std::int64_t n = em.n;
  Eigen::VectorXd gammas = rhs.kind == RhsModel::Kind::separable_gaussian
                               ? rhs.gammas
                               : Eigen::VectorXd::Constant(n, rhs.gamma);
  if (gammas.size() != n) throw InfeasibleError("residual_probe: gamma vector dimension mismatch");

  // Draws follow q(omega) ~ F^(omega); the weight F^/q is then the constant
  // Z = prod sqrt(pi/gamma_i), and the common (2 pi)^{-n/2} Z factor is
  // attached once.
  double log_const = -0.5 * n * std::log(2.0 * M_PI);
  for (Eigen::Index i = 0; i < n; ++i) log_const += 0.5 * (std::log(M_PI) - std::log(gammas(i)));
  const double c = std::exp(log_const);

  const std::size_t n_pts = points.size();
  std::vector<Eigen::VectorXd> lifted(n_pts);
  for (std::size_t p = 0; p < n_pts; ++p) {
    if (points[p].size() != em.m) throw InfeasibleError("residual_probe: point dimension mismatch");
    lifted[p] = em.T * points[p];
  }

  struct Sums {
    std::vector<double> g1, g2, u1;
    explicit Sums(std::size_t np) : g1(np, 0.0), g2(np, 0.0), u1(np, 0.0) {}
  };
  const std::int64_t n_chunks = (quad_count + kChunk - 1) / kChunk;
  std::vector<Sums> per_chunk(static_cast<std::size_t>(n_chunks), Sums(n_pts));
  Rng root(seed);
  for_each_chunk(quad_count, kChunk, 1, [&](std::int64_t chunk, std::int64_t, std::int64_t cnt) {
    Rng rng = root.stream(static_cast<std::uint64_t>(chunk));
    Sums& sums = per_chunk[static_cast<std::size_t>(chunk)];
    Eigen::VectorXd omega(n);
    for (std::int64_t i = 0; i < cnt; ++i) {
      for (Eigen::Index j = 0; j < n; ++j)
        omega(j) = rng.normal() / std::sqrt(2.0 * gammas(j));
      const double t = (em.T.transpose() * omega).squaredNorm();
      const double rho = omega.squaredNorm();
      const double kern = kernel ? kernel->eval(rho) : 1.0 / (rho + mu);
      const double pk = schedule.eval(k, kern * (t + mu));
      for (std::size_t p = 0; p < n_pts; ++p) {
        const double phase = std::cos(omega.dot(lifted[p]));
        const double g = -c * pk * phase;
        sums.g1[p] += g;
        sums.g2[p] += g * g;
        sums.u1[p] += c * (1.0 - pk) / (t + mu) * phase;
      }
    }
  });

  std::vector<ResidualEstimate> out(n_pts);
  const double nq = static_cast<double>(quad_count);
  for (std::size_t p = 0; p < n_pts; ++p) {
    double g1 = 0.0, g2 = 0.0, u1 = 0.0;
    for (const auto& sums : per_chunk) {
      g1 += sums.g1[p];
      g2 += sums.g2[p];
      u1 += sums.u1[p];
    }
    ResidualEstimate& est = out[p];
    est.residual = g1 / nq;
    double var = std::max(0.0, g2 / nq - est.residual * est.residual);
    est.se = std::sqrt(var / nq);
    est.u_value = u1 / nq;
    est.inconclusive = est.se > 0.2 * std::fabs(est.residual);
  }
  return out;
}

}  // namespace hdlap
