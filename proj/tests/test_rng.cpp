#include <cmath>
#include <vector>

#include "doctest.h"
#include "hdlap/rng.hpp"

using hdlap::Rng;

TEST_CASE("fixed seed reproduces the stream bit for bit") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  Rng c(42), d(42);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.normal() == d.normal());
  }
}

TEST_CASE("derived streams differ from each other and the root") {
  Rng root(7);
  Rng s0 = root.stream(0), s1 = root.stream(1);
  int same01 = 0, same0r = 0;
  Rng r(7);
  for (int i = 0; i < 64; ++i) {
    auto a = s0.next_u64(), b = s1.next_u64(), c = r.next_u64();
    same01 += (a == b);
    same0r += (a == c);
  }
  CHECK(same01 == 0);
  CHECK(same0r == 0);
}

TEST_CASE("uniform lies in [0,1)") {
  Rng rng(3);
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal moments match the standard normal") {
  Rng rng(11);
  const int n = 1000000;
  double s = 0.0, s2 = 0.0, s4 = 0.0;
  for (int i = 0; i < n; ++i) {
    double z = rng.normal();
    s += z;
    s2 += z * z;
    s4 += z * z * z * z;
  }
  double mean = s / n, m2 = s2 / n, m4 = s4 / n;
  CHECK(std::fabs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::fabs(m2 - 1.0) < 4.0 * std::sqrt(2.0 / n));
  CHECK(std::fabs(m4 - 3.0) < 4.0 * std::sqrt(96.0 / n));  // Var(z^4) = 105 - 9
}

TEST_CASE("chi-square mean and variance, both sampling paths") {
  Rng rng(5);
  for (std::int64_t k : {3, 64, 200}) {
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = rng.chi_square(k);
      s += x;
      s2 += x * x;
    }
    double mean = s / n;
    double var = s2 / n - mean * mean;
    double kd = static_cast<double>(k);
    CHECK(std::fabs(mean - kd) < 5.0 * std::sqrt(2.0 * kd / n));
    CHECK(std::fabs(var - 2.0 * kd) < 5.0 * std::sqrt(8.0 * kd * kd + 48.0 * kd) / std::sqrt(n));
  }
  CHECK(rng.chi_square(0) == 0.0);
}

TEST_CASE("gamma sampler matches mean and variance for small shapes") {
  Rng rng(9);
  for (double shape : {0.5, 1.0, 4.5}) {
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = rng.gamma(shape);
      s += x;
      s2 += x * x;
    }
    double mean = s / n;
    double var = s2 / n - mean * mean;
    CHECK(std::fabs(mean - shape) < 6.0 * std::sqrt(shape / n));
    CHECK(std::fabs(var - shape) < 6.0 * std::sqrt((2.0 + 6.0 / shape) * shape * shape / n));
  }
}
