#include "hdlap/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hdlap {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

Rng Rng::stream(std::uint64_t index) const {
  // Stream seeds are splitmix64 outputs of (seed, index); splitmix64 is a
  // bijection per step, so distinct indices give distinct engine seeds.
  std::uint64_t s = seed_ + 0x632be59bd9b4e019ULL * (index + 1);
  std::uint64_t derived = splitmix64_next(s);
  return Rng(derived);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, q;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    q = u * u + v * v;
  } while (q >= 1.0 || q == 0.0);
  double f = std::sqrt(-2.0 * std::log(q) / q);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

double Rng::chi_square(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("chi_square: negative dof");
  if (k == 0) return 0.0;
  if (k <= 64) {
    double acc = 0.0;
    for (std::int64_t i = 0; i < k; ++i) {
      double z = normal();
      acc += z * z;
    }
    return acc;
  }
  return 2.0 * gamma(0.5 * static_cast<double>(k));
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
  if (shape < 1.0) {
    // Boost trick: Gamma(a) = Gamma(a+1) * U^{1/a}.
    double g = gamma(shape + 1.0);
    double u;
    do {
      u = uniform();
    } while (u == 0.0);
    return g * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang "squeeze" method.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace hdlap
