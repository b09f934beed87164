#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hdlap/errors.hpp"
#include "hdlap/orthopoly.hpp"
#include "hdlap/quadrature.hpp"
#include "hdlap/rates.hpp"
#include "hdlap/rng.hpp"

using namespace hdlap;

TEST_CASE("hermite polynomial values and orthogonality") {
  CHECK(hermite_he(2, 2.0) == 3.0);    // x^2 - 1
  CHECK(hermite_he(3, 1.0) == -2.0);   // x^3 - 3x
  CHECK(hermite_he(0, 5.0) == 1.0);
  CHECK(hermite_he(1, -0.25) == -0.25);

  // int He_3(x)^2 e^{-x^2/2} dx = sqrt(2 pi) 3!
  GaussRule rule = gauss_hermite_prob(12);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double he3 = hermite_he(3, rule.nodes[i]);
    acc += rule.weights[i] * he3 * he3;
  }
  CHECK(acc == doctest::Approx(6.0).epsilon(1e-12));  // probability weight absorbs sqrt(2 pi)
}

TEST_CASE("scaled hermite evaluation matches the plain recurrence") {
  for (double x : {-16.0, -3.2, 0.5, 30.0}) {
    auto seq = hermite_he_scaled(12, x);
    for (int k = 0; k <= 12; ++k) {
      double plain = hermite_he(k, x);
      CHECK(seq[static_cast<std::size_t>(k)].to_double() ==
            doctest::Approx(plain).epsilon(1e-12));
    }
  }
  // far outside the double range of the raw recurrence
  auto big = hermite_he_scaled(64, -1000.0);
  CHECK(big[64].sign != 0);
  CHECK(big[64].log_abs > 64 * std::log(999.0));
  CHECK(std::isfinite(big[64].log_abs));
}

namespace {

std::vector<std::vector<double>> load_golden() {
  std::ifstream in(std::string(HDLAP_TEST_DATA_DIR) + "/mk_normal_golden.csv");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::vector<double> row;
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 12);
  return rows;
}

}  // namespace

TEST_CASE("normal-weight reduction factors reproduce the reference table") {
  auto golden = load_golden();
  auto c16 = mk_normal(1.0 / 16.0, 12);
  auto c32 = mk_normal(1.0 / 32.0, 12);
  auto c64 = mk_normal(1.0 / 64.0, 12);
  CHECK(c16[1] == doctest::Approx(1.0 / 257.0).epsilon(1e-12));  // closed form sigma^2/(1+sigma^2)
  for (int k = 1; k <= 12; ++k) {
    auto kk = static_cast<std::size_t>(k);
    CHECK(std::fabs(c16[kk] - golden[kk - 1][1]) <= 5e-6 * golden[kk - 1][1]);
    CHECK(std::fabs(c32[kk] - golden[kk - 1][2]) <= 5e-6 * golden[kk - 1][2]);
    CHECK(std::fabs(c64[kk] - golden[kk - 1][3]) <= 5e-6 * golden[kk - 1][3]);
  }
}

TEST_CASE("log-space contract: extreme parameters stay finite") {
  auto mk = mk_normal(1e-4, 64);
  for (std::size_t k = 0; k < mk.size(); ++k) {
    CHECK(std::isfinite(mk[k]));
    CHECK(mk[k] >= 0.0);
    if (k > 0) CHECK(mk[k] <= mk[k - 1]);
  }
  CHECK_THROWS_AS(mk_normal(0.0625, 65), InfeasibleError);
}

TEST_CASE("beta-weight reduction factors: uniform case and closed form") {
  auto mk = mk_beta(1.0, 1.0, 6);
  CHECK(mk[0] == 1.0);
  for (int k = 0; k <= 6; ++k)
    CHECK(mk[static_cast<std::size_t>(k)] ==
          doctest::Approx(1.0 / ((k + 1.0) * (k + 1.0))).epsilon(1e-13));

  Rng rng(4);
  for (int rep = 0; rep < 25; ++rep) {
    double alpha = 0.7 + 199.3 * rng.uniform();
    double beta = 0.7 + 199.3 * rng.uniform();
    double p_sq = 1.0;
    const double a = beta - 1.0, b = alpha - 1.0;
    for (int k = 1; k <= 20; ++k) {
      double kk = k - 1.0;
      p_sq *= (kk + b + 1.0) * (kk + a + b + 1.0) * (2.0 * kk + a + b + 3.0) /
              ((kk + 1.0) * (kk + a + 1.0) * (2.0 * kk + a + b + 1.0));
      double closed = beta_p0_squared_closed(alpha, beta, k);
      CHECK(std::fabs(p_sq - closed) <= 1e-10 * closed);
    }
  }
}

TEST_CASE("beta factors undercut the variance-matched normal factors") {
  // rescaled projection m = 30, n = 165
  const double alpha = 15.0, beta = 67.5;
  const double v = beta / (alpha * (alpha + beta + 1.0));
  auto mb = mk_beta(alpha, beta, 8);
  auto mn = mk_normal(std::sqrt(v), 8);
  CHECK(mb[1] == doctest::Approx(mn[1]).epsilon(1e-12));  // M_1 = V/(1+V) for both
  for (std::size_t k = 2; k <= 8; ++k) {
    CHECK(mb[k] < mn[k]);
    CHECK(mb[k] < mb[k - 1]);
  }
}

TEST_CASE("orthonormality by quadrature in both families") {
  auto hermite = OrthogonalFamily::hermite(1.0 / 16.0, 8);
  auto jacobi = OrthogonalFamily::jacobi(15.0, 67.5, true, 8);
  for (const auto& family : {hermite, jacobi}) {
    GaussRule rule = family.weighted_rule(40);
    for (int i = 0; i <= 8; ++i) {
      for (int j = i; j <= 8; ++j) {
        double acc = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q)
          acc += rule.weights[q] * family.p(i, rule.nodes[q]) * family.p(j, rule.nodes[q]);
        CHECK(std::fabs(acc - (i == j ? 1.0 : 0.0)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("p_k(0) accumulations stay strictly positive") {
  for (const auto& family :
       {OrthogonalFamily::hermite(0.1, 20), OrthogonalFamily::jacobi(3.0, 9.0, true, 20)}) {
    auto mk = family.mk();
    for (std::size_t k = 0; k < mk.size(); ++k) {
      CHECK(mk[k] > 0.0);
      if (k > 0 && family.p_at_zero()[k].sign != 0) CHECK(mk[k] < mk[k - 1]);
    }
  }
}

TEST_CASE("optimal polynomials: constraint, norm and minimality") {
  auto family = OrthogonalFamily::hermite(1.0 / 16.0, 8);
  auto schedule = RateSchedule::optimal(family);
  auto mk = schedule.mk();

  for (int k = 0; k <= 8; ++k) CHECK(schedule.eval(k, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(schedule.eval(0, 0.37) == doctest::Approx(1.0));

  // P_1(1) = M_1 (p_1 vanishes at the weight mean)
  CHECK(schedule.eval(1, 1.0) == doctest::Approx(mk[1]).epsilon(1e-12));

  // int P_k^2 f = M_k by quadrature
  GaussRule rule = family.weighted_rule(40);
  for (int k = 0; k <= 8; ++k) {
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      double p = schedule.eval(k, rule.nodes[q]);
      acc += rule.weights[q] * p * p;
    }
    CHECK(std::fabs(acc - mk[static_cast<std::size_t>(k)]) <=
          1e-8 * mk[static_cast<std::size_t>(k)]);
  }

  // minimality among random P(0) = 1 polynomials
  Rng rng(2718);
  for (int k : {1, 2, 3}) {
    for (int rep = 0; rep < 100; ++rep) {
      std::vector<double> coef(static_cast<std::size_t>(k));
      for (auto& c : coef) c = 4.0 * (rng.uniform() - 0.5) * std::pow(16.0, k);
      auto q_eval = [&](double t) {
        double acc = 1.0, tp = 1.0;
        for (int j = 0; j < k; ++j) {
          tp *= t;
          acc += coef[static_cast<std::size_t>(j)] * tp;
        }
        return acc;
      };
      double acc = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        double val = q_eval(rule.nodes[q]);
        acc += rule.weights[q] * val * val;
      }
      CHECK(acc >= mk[static_cast<std::size_t>(k)] - 1e-10);
    }
  }
}

TEST_CASE("eval_all matches the single-k path") {
  auto opt = RateSchedule::optimal(OrthogonalFamily::hermite(0.15, 6));
  auto cheb = RateSchedule::chebyshev(0.5, 4.0, 6);
  auto basic = RateSchedule::basic(0.25, 6);
  std::vector<double> buf;
  for (const auto& s : {opt, cheb, basic}) {
    for (double lambda : {0.0, 0.31, 1.0, 2.5}) {
      s.eval_all(lambda, buf);
      for (int k = 0; k <= 6; ++k)
        CHECK(buf[static_cast<std::size_t>(k)] ==
              doctest::Approx(s.eval(k, lambda)).epsilon(1e-13));
    }
  }
}

TEST_CASE("chebyshev schedule: constraint, bounds and degenerate interval") {
  auto s = RateSchedule::chebyshev(0.5, 4.0, 10);
  CHECK(s.kappa() == doctest::Approx(8.0));
  for (int k = 0; k <= 10; ++k) CHECK(s.eval(k, 0.0) == 1.0);  // exact by construction

  // grid max on [a, b] obeys the sharp bound; the proof-quoted variant sits
  // just below the sharp one
  for (int k : {1, 3, 6}) {
    double grid_max = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      double lambda = s.interval_lo() + (s.interval_hi() - s.interval_lo()) * i / 10000.0;
      grid_max = std::max(grid_max, std::fabs(s.eval(k, lambda)));
    }
    CHECK(grid_max <= s.bound_classical(k) * (1.0 + 1e-12));
    CHECK(s.bound_proof(k) <= s.bound_classical(k));
    CHECK(grid_max > 0.9 * s.bound_classical(k));
  }

  // kappa -> 1: r -> 0 and the interval bound collapses
  auto tight = RateSchedule::chebyshev(0.5, 0.5 * (1.0 + 1e-12), 4);
  CHECK(tight.r() < 1e-5);
  CHECK(tight.bound_classical(1) < 1e-4);
  CHECK_THROWS_AS(RateSchedule::chebyshev(0.5, 0.5, 4), InfeasibleError);  // a = b
  CHECK_THROWS_AS(RateSchedule::chebyshev(0.5, 0.2, 4), InfeasibleError);  // a > b
}

TEST_CASE("prefactor quadrature") {
  // optimal schedule over its own weight returns M_k
  auto family = OrthogonalFamily::hermite(1.0 / 32.0, 6);
  auto opt = RateSchedule::optimal(family);
  DensityModel normal{NormalModel{1.0, 1.0 / 1024.0}};
  double p3 = prefactor_quadrature(opt, normal, 3);
  CHECK(std::fabs(p3 - 5.60431e-09) <= 5e-6 * 5.60431e-09);

  // k = 0 integrates any probability density to one
  CHECK(prefactor_quadrature(opt, normal, 0) == doctest::Approx(1.0).epsilon(1e-12));
  DensityModel beta{BetaModel{15.0, 67.5, true}};
  CHECK(prefactor_quadrature(opt, beta, 0) == doctest::Approx(1.0).epsilon(1e-10));

  // chebyshev prefactor cannot undercut the optimal one
  auto cheb = RateSchedule::chebyshev(0.5, 4.0, 6);
  for (int k : {1, 2, 4}) {
    CHECK(prefactor_quadrature(cheb, normal, k) >=
          opt.mk()[static_cast<std::size_t>(k)] - 1e-12);
  }

  // empirical model: sample mean of P_k^2
  std::vector<double> vals{0.9, 1.0, 1.1};
  DensityModel emp{empirical_summary(std::move(vals), 2)};
  double direct = 0.0;
  for (double t : {0.9, 1.0, 1.1}) {
    double p = opt.eval(2, t);
    direct += p * p / 3.0;
  }
  CHECK(prefactor_quadrature(opt, emp, 2) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("jacobi optimal schedule integrates to its factors") {
  auto family = OrthogonalFamily::jacobi(15.0, 67.5, true, 6);
  auto opt = RateSchedule::optimal(family);
  DensityModel weight{BetaModel{15.0, 67.5, true}};
  for (int k = 0; k <= 6; ++k) {
    double pref = prefactor_quadrature(opt, weight, k);
    CHECK(std::fabs(pref - opt.mk()[static_cast<std::size_t>(k)]) <=
          1e-8 * opt.mk()[static_cast<std::size_t>(k)]);
  }
}
