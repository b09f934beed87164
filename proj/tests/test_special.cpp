#include <cmath>

#include "doctest.h"
#include "hdlap/rng.hpp"
#include "hdlap/special.hpp"

using namespace hdlap;

TEST_CASE("log_gamma agrees with the C library") {
  for (double x : {0.7, 1.0, 1.5, 2.0, 7.5, 30.0, 64.0, 500.5, 1000.0}) {
    CHECK(std::fabs(log_gamma(x) - std::lgamma(x)) <= 1e-12 * (1.0 + std::fabs(std::lgamma(x))));
  }
  CHECK_THROWS(log_gamma(0.0));
}

TEST_CASE("incomplete beta closed forms") {
  for (double x : {0.05, 0.3, 0.5, 0.77}) {
    CHECK(inc_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-14));
    CHECK(inc_beta(1.0, 4.0, x) ==
          doctest::Approx(1.0 - std::pow(1.0 - x, 4.0)).epsilon(1e-13));
    CHECK(inc_beta(2.0, 1.0, x) == doctest::Approx(x * x).epsilon(1e-13));
  }
  CHECK(inc_beta(3.0, 5.0, 0.0) == 0.0);
  CHECK(inc_beta(3.0, 5.0, 1.0) == 1.0);
}

TEST_CASE("incomplete beta symmetry holds up to large parameters") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    double a = 0.5 + 1500.0 * rng.uniform();
    double b = 0.5 + 1500.0 * rng.uniform();
    double x = rng.uniform();
    double lhs = inc_beta(a, b, x) + inc_beta(b, a, 1.0 - x);
    CHECK(std::fabs(lhs - 1.0) <= 1e-12);
  }
}

TEST_CASE("incomplete beta is monotone in x") {
  double prev = 0.0;
  for (int i = 1; i <= 50; ++i) {
    double v = inc_beta(30.0, 67.5, i / 51.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("normal cdf reference values") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(-8.0) == doctest::Approx(6.22096057427178e-16).epsilon(1e-9));
  for (double x : {0.3, 1.1, 2.7}) {
    CHECK(normal_cdf(x) + normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("log-sum-exp accumulator") {
  LogSumExp acc;
  acc.add(std::log(2.0));
  acc.add(std::log(3.0));
  acc.add(std::log(5.0));
  CHECK(acc.value() == doctest::Approx(std::log(10.0)).epsilon(1e-14));
  LogSumExp big;
  big.add(1000.0);
  big.add(1000.0 + std::log(2.0));
  CHECK(big.value() == doctest::Approx(1000.0 + std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("signed log values round-trip") {
  for (double v : {3.25, -1e-12, 7e100, -2e-200}) {
    auto s = SignedLog::from(v);
    CHECK(s.to_double() == doctest::Approx(v).epsilon(1e-15));
  }
  CHECK(SignedLog::from(0.0).sign == 0);
  CHECK(SignedLog::zero().to_double() == 0.0);
}
