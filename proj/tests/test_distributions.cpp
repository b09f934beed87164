#include <cmath>

#include "doctest.h"
#include "hdlap/distributions.hpp"
#include "hdlap/errors.hpp"
#include "hdlap/quadrature.hpp"
#include "hdlap/rng.hpp"
#include "hdlap/sampling.hpp"
#include "hdlap/special.hpp"

using namespace hdlap;

TEST_CASE("projection cdf basics") {
  // alpha = beta = 1 is the uniform distribution
  for (double d : {0.1, 0.4, 0.9}) {
    CHECK(projection_cdf(2, 4, d) == doctest::Approx(d).epsilon(1e-13));
  }
  CHECK(projection_cdf(30, 165, 0.0) == 0.0);
  CHECK(projection_cdf(30, 165, 0.999999) > 0.999);
  double prev = 0.0;
  for (int i = 1; i < 20; ++i) {
    double f = projection_cdf(30, 165, i / 20.0);
    CHECK(f >= prev);
    prev = f;
  }
  CHECK_THROWS_AS(projection_cdf(30, 165, 1.0), InfeasibleError);
  CHECK_THROWS_AS(projection_cdf(30, 165, -0.1), InfeasibleError);
  CHECK_THROWS_AS(projection_cdf(5, 5, 0.5), InfeasibleError);
}

TEST_CASE("projection cdf matches projection samples") {
  const std::int64_t m = 30, n = 165, count = 100000;
  std::vector<double> ones(static_cast<std::size_t>(m), 1.0);
  auto ed = symbol_samples(ones, n, count, 4242, false);
  double d = ks_distance(ed.values, [&](double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return projection_cdf(m, n, t);
  });
  CHECK(d <= ks_critical_value(count, 0.01));
}

TEST_CASE("concentration bound values and structure") {
  const std::int64_t m = 30, n = 165;
  const double xi = 30.0 / 165.0;

  // delta -> xi: phi -> 1
  CHECK(concentration_bound(m, n, xi * (1.0 - 1e-9), TailSide::below) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // explicit value at delta = xi/2
  double phi_half = std::sqrt(0.5) * std::exp(0.25);
  double bound = concentration_bound(m, n, xi / 2.0, TailSide::below);
  CHECK(bound == doctest::Approx(std::pow(phi_half, 30.0)).epsilon(1e-12));
  CHECK(projection_cdf(m, n, xi / 2.0) <= bound);

  // doubling m squares the bound at fixed delta/xi
  double b2 = concentration_bound(2 * m, 2 * n, xi / 2.0, TailSide::below);
  CHECK(b2 == doctest::Approx(bound * bound).epsilon(1e-10));

  CHECK_THROWS_AS(concentration_bound(m, n, xi * 1.5, TailSide::below), InfeasibleError);
  CHECK_THROWS_AS(concentration_bound(m, n, xi * 0.5, TailSide::above), InfeasibleError);
}

TEST_CASE("concentration bound dominates both tails of the projection cdf") {
  for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{3, 6}, {30, 165}, {64, 128}}) {
    const double xi = static_cast<double>(m) / static_cast<double>(n);
    for (int i = 1; i <= 50; ++i) {
      double d_lo = xi * i / 51.0;
      CHECK(projection_cdf(m, n, d_lo) <=
            concentration_bound(m, n, d_lo, TailSide::below) + 1e-14);
      double d_hi = xi + (1.0 - xi) * i / 51.0;
      if (d_hi < 1.0) {
        CHECK(1.0 - projection_cdf(m, n, d_hi) <=
              concentration_bound(m, n, d_hi, TailSide::above) + 1e-14);
      }
    }
  }
}

TEST_CASE("cdf curves steepen towards the step function as m doubles") {
  for (double delta : {0.3, 0.45, 0.55, 0.7}) {
    double prev = projection_cdf(2, 4, delta);
    for (int k = 2; k <= 10; ++k) {
      std::int64_t m = std::int64_t{1} << k;
      double f = projection_cdf(m, 2 * m, delta);
      if (delta < 0.5) {
        CHECK(f < prev);
      } else {
        CHECK(f > prev);
      }
      prev = f;
    }
  }
}

TEST_CASE("normal limit of standardized beta distributions") {
  double d2 = normal_limit_distance(2, 2);
  double d64 = normal_limit_distance(64, 64);
  CHECK(d2 > d64);
  CHECK(d64 >= 0.0);
  CHECK(normal_limit_distance(512, 512) < 0.01);
  CHECK_THROWS_AS(normal_limit_distance(1.0, 4.0), InfeasibleError);

  // symmetric case: standardized CDF satisfies B(x) + B(-x) = 1
  const double alpha = 8.0;
  const double e = 0.5, v = alpha * alpha / (4.0 * alpha * alpha * (2.0 * alpha + 1.0));
  const double sigma = std::sqrt(v);
  for (double x : {0.5, 1.0, 2.5}) {
    double bp = inc_beta(alpha, alpha, e + sigma * x);
    double bm = inc_beta(alpha, alpha, e - sigma * x);
    CHECK(bp + bm == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("rescaled beta fit: symmetric closed form and round trips") {
  // Z = 0: alpha = beta = (1-V)/(2V)
  double v = 0.05;
  auto fit = fit_rescaled_beta(v, 0.0);
  CHECK(fit.alpha == doctest::Approx((1.0 - v) / (2.0 * v)).epsilon(1e-12));
  CHECK(fit.beta == doctest::Approx(fit.alpha).epsilon(1e-12));

  auto m0 = rescaled_beta_moments(15.0, 67.5);
  auto back = fit_rescaled_beta(m0.v, m0.z);
  CHECK(back.alpha == doctest::Approx(15.0).epsilon(1e-9));
  CHECK(back.beta == doctest::Approx(67.5).epsilon(1e-9));

  Rng rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    double a = 1.5 + 498.5 * rng.uniform();
    double b = 1.5 + 498.5 * rng.uniform();
    auto m = rescaled_beta_moments(a, b);
    auto f = fit_rescaled_beta(m.v, m.z);
    CHECK(std::fabs(f.alpha - a) <= 1e-9 * a);
    CHECK(std::fabs(f.beta - b) <= 1e-9 * b);
  }
}

TEST_CASE("rescaled beta fit rejects the boundary and names the side") {
  double v = 0.1;
  CHECK_THROWS_WITH_AS(fit_rescaled_beta(v, 2.0 * v * v), doctest::Contains("Z/(2V) < V"),
                       InfeasibleError);
  CHECK_THROWS_WITH_AS(fit_rescaled_beta(v, -1.01 * v * (1.0 - v)),
                       doctest::Contains("-(1-V)/2 < Z/(2V)"), InfeasibleError);
  CHECK_THROWS_AS(fit_rescaled_beta(0.0, 0.0), InfeasibleError);
}

TEST_CASE("density models normalize and rescaled beta has mean one") {
  DensityModel normal{NormalModel{1.0, 9.0 / 380.0}};
  double total = integrate_gk([&](double t) { return normal.density(t); },
                              1.0 - 12.0 * std::sqrt(9.0 / 380.0),
                              1.0 + 12.0 * std::sqrt(9.0 / 380.0), 1e-12);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(normal.density(1.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * 9.0 / 380.0)).epsilon(1e-14));

  BetaModel plain{15.0, 67.5, false};
  DensityModel pd{plain};
  CHECK(integrate_gk([&](double t) { return pd.density(t); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-8));

  BetaModel rescaled{15.0, 67.5, true};
  DensityModel rd{rescaled};
  double hi = rescaled.support_hi();
  CHECK(integrate_gk([&](double t) { return rd.density(t); }, 0.0, hi, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(integrate_gk([&](double t) { return t * rd.density(t); }, 0.0, hi, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("beta cdf at the projection mean") {
  DensityModel beta{BetaModel{15.0, 67.5, false}};
  double f = beta.cdf(2.0 / 11.0);
  CHECK(f > 0.0);
  CHECK(f < 1.0);
  // distribution function of the sampled projection symbol agrees
  std::vector<double> ones(30, 1.0);
  auto ed = symbol_samples(ones, 165, 100000, 31337, false);
  auto sorted = ed.values;
  std::sort(sorted.begin(), sorted.end());
  auto below = std::lower_bound(sorted.begin(), sorted.end(), 2.0 / 11.0) - sorted.begin();
  double emp = static_cast<double>(below) / static_cast<double>(sorted.size());
  CHECK(std::fabs(f - emp) <= ks_critical_value(100000, 0.01));
}

TEST_CASE("tail weight: divergence, closed form and fit case") {
  // m = 2 projection: alpha = 1, f(t)/t not integrable
  CHECK(!tail_weight(DensityModel{BetaModel{1.0, 5.0, false}}, 0.5).has_value());
  CHECK(!tail_weight(DensityModel{NormalModel{1.0, 0.02}}, 0.5).has_value());

  // Beta(2,2): int_0^d 6(1-t) dt = 6d - 3d^2
  DensityModel b22{BetaModel{2.0, 2.0, false}};
  for (double d : {0.2, 0.5, 0.9}) {
    auto w = tail_weight(b22, d);
    REQUIRE(w.has_value());
    CHECK(*w == doctest::Approx(6.0 * d - 3.0 * d * d).epsilon(1e-9));
  }

  // rescaled fit of the C60 moments
  auto fit = fit_rescaled_beta(9.0 / 380.0, 3.0 / 4180.0);
  DensityModel c60fit{BetaModel{fit.alpha, fit.beta, true}};
  auto w_half = tail_weight(c60fit, 0.5);
  REQUIRE(w_half.has_value());
  CHECK(*w_half >= 0.0);
  auto w_quarter = tail_weight(c60fit, 0.25);
  REQUIRE(w_quarter.has_value());
  CHECK(*w_quarter <= *w_half);
  CHECK(*tail_weight(c60fit, 1e-3) <= 1e-12);

  // oracle: fixed composite Simpson on the substituted variable at high
  // resolution
  auto simpson = [&](double delta) {
    const int panels = 1 << 15;
    auto f = [&](double u) { return 2.0 * delta * u * c60fit.density(delta * u * u) /
                                    (delta * u * u); };
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
      double u0 = static_cast<double>(i) / panels, u1 = static_cast<double>(i + 1) / panels;
      double um = 0.5 * (u0 + u1);
      double f0 = u0 == 0.0 ? 0.0 : f(u0);
      acc += (u1 - u0) / 6.0 * (f0 + 4.0 * f(um) + f(u1));
    }
    return acc;
  };
  CHECK(*w_half == doctest::Approx(simpson(0.5)).epsilon(1e-7));

  CHECK_THROWS_AS(tail_weight(b22, 0.0), InfeasibleError);
}

TEST_CASE("empirical density model") {
  std::vector<double> vals;
  Rng rng(8);
  for (int i = 0; i < 20000; ++i) vals.push_back(rng.uniform());
  DensityModel em{empirical_summary(std::move(vals), 50)};
  CHECK(em.cdf(-0.1) == 0.0);
  CHECK(em.cdf(1.1) == 1.0);
  CHECK(em.cdf(0.5) == doctest::Approx(0.5).epsilon(0.05));
  CHECK(em.density(0.5) == doctest::Approx(1.0).epsilon(0.2));
  auto tw = tail_weight(em, 0.5);
  REQUIRE(tw.has_value());
  // E[1/t ; t <= 1/2] for uniform values, MC agreement at loose tolerance
  CHECK(*tw > 0.0);
}
