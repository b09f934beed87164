#include "hdlap/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hdlap/errors.hpp"
#include "hdlap/parallel.hpp"
#include "hdlap/rng.hpp"

namespace hdlap {

namespace {

constexpr std::int64_t kChunk = 1 << 14;

void fill_moments(EmpiricalDistribution& ed) {
  const double n = static_cast<double>(ed.values.size());
  double mean = 0.0;
  for (double v : ed.values) mean += v;
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double v : ed.values) {
    double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  ed.mean = mean;
  ed.variance = m2 / n;
  ed.z = m3 / n;
}

void fill_histogram(EmpiricalDistribution& ed, int bin_count) {
  auto [mn_it, mx_it] = std::minmax_element(ed.values.begin(), ed.values.end());
  double lo = *mn_it, hi = *mx_it;
  if (lo == hi) {
    ed.degenerate = true;
    ed.bin_edges = {lo, hi};
    ed.counts = {static_cast<std::int64_t>(ed.values.size())};
    return;
  }
  ed.bin_edges.resize(static_cast<std::size_t>(bin_count) + 1);
  for (int b = 0; b <= bin_count; ++b)
    ed.bin_edges[static_cast<std::size_t>(b)] = lo + (hi - lo) * b / bin_count;
  ed.counts.assign(static_cast<std::size_t>(bin_count), 0);
  const double scale = bin_count / (hi - lo);
  for (double v : ed.values) {
    auto b = static_cast<std::int64_t>((v - lo) * scale);
    if (b >= bin_count) b = bin_count - 1;
    if (b < 0) b = 0;
    ++ed.counts[static_cast<std::size_t>(b)];
  }
}

}  // namespace

double EmpiricalDistribution::density(std::size_t b) const {
  if (degenerate) return 0.0;
  const double width = bin_edges[b + 1] - bin_edges[b];
  return static_cast<double>(counts[b]) / (static_cast<double>(values.size()) * width);
}

double EmpiricalDistribution::standard_error_mean() const {
  return std::sqrt(variance / static_cast<double>(values.size()));
}

SphereSample sphere_sample(std::int64_t n, std::int64_t count, std::uint64_t seed) {
  if (n < 1 || count < 1) throw InfeasibleError("sphere_sample: need n >= 1, count >= 1");
  SphereSample out;
  out.n = n;
  out.seed = seed;
  out.points.resize(count, n);
  Rng root(seed);
  for_each_chunk(count, kChunk, 1, [&](std::int64_t chunk, std::int64_t begin, std::int64_t cnt) {
    Rng rng = root.stream(static_cast<std::uint64_t>(chunk));
    for (std::int64_t i = begin; i < begin + cnt; ++i) {
      double norm_sq;
      do {
        norm_sq = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
          double z = rng.normal();
          out.points(i, j) = z;
          norm_sq += z * z;
        }
      } while (norm_sq == 0.0);
      out.points.row(i) /= std::sqrt(norm_sq);
    }
  });
  return out;
}

EmpiricalDistribution empirical_summary(std::vector<double> values, int bin_count) {
  if (values.empty()) throw InfeasibleError("empirical_summary: no values");
  if (bin_count < 1) throw InfeasibleError("empirical_summary: bin_count >= 1 required");
  EmpiricalDistribution ed;
  ed.values = std::move(values);
  fill_moments(ed);
  fill_histogram(ed, bin_count);
  return ed;
}

EmpiricalDistribution symbol_samples(const std::vector<double>& singular_values, std::int64_t n,
                                     std::int64_t count, std::uint64_t seed, bool materialize_full,
                                     int bin_count, int threads) {
  const std::int64_t m = static_cast<std::int64_t>(singular_values.size());
  if (m < 1 || n < m) throw InfeasibleError("symbol_samples: need 1 <= m <= n");
  for (double s : singular_values)
    if (!(s > 0.0)) throw InfeasibleError("symbol_samples: singular values must be positive");
  if (count < 1) throw InfeasibleError("symbol_samples: count >= 1 required");

  std::vector<double> sigma_sq(singular_values.size());
  for (std::size_t i = 0; i < singular_values.size(); ++i)
    sigma_sq[i] = singular_values[i] * singular_values[i];

  std::vector<double> values(static_cast<std::size_t>(count));
  Rng root(seed);
  for_each_chunk(count, kChunk, threads,
                 [&](std::int64_t chunk, std::int64_t begin, std::int64_t cnt) {
                   Rng rng = root.stream(static_cast<std::uint64_t>(chunk));
                   for (std::int64_t i = begin; i < begin + cnt; ++i) {
                     double num = 0.0, den = 0.0;
                     for (std::int64_t j = 0; j < m; ++j) {
                       double x = rng.normal();
                       num += sigma_sq[static_cast<std::size_t>(j)] * x * x;
                       den += x * x;
                     }
                     if (materialize_full) {
                       for (std::int64_t j = m; j < n; ++j) {
                         double y = rng.normal();
                         den += y * y;
                       }
                     } else {
                       den += rng.chi_square(n - m);
                     }
                     values[static_cast<std::size_t>(i)] = num / den;
                   }
                 });
  EmpiricalDistribution ed = empirical_summary(std::move(values), bin_count);
  ed.seed = seed;
  return ed;
}

EmpiricalDistribution symbol_samples_matrix(const EmbeddingMatrix& em, std::int64_t count,
                                            std::uint64_t seed, int bin_count, int threads) {
  if (count < 1) throw InfeasibleError("symbol_samples_matrix: count >= 1 required");
  std::vector<double> values(static_cast<std::size_t>(count));
  Rng root(seed);
  for_each_chunk(count, kChunk, threads,
                 [&](std::int64_t chunk, std::int64_t begin, std::int64_t cnt) {
                   Rng rng = root.stream(static_cast<std::uint64_t>(chunk));
                   Eigen::VectorXd z(em.n);
                   for (std::int64_t i = begin; i < begin + cnt; ++i) {
                     double norm_sq;
                     do {
                       norm_sq = 0.0;
                       for (std::int64_t j = 0; j < em.n; ++j) {
                         z(j) = rng.normal();
                         norm_sq += z(j) * z(j);
                       }
                     } while (norm_sq == 0.0);
                     values[static_cast<std::size_t>(i)] =
                         (em.T.transpose() * z).squaredNorm() / norm_sq;
                   }
                 });
  EmpiricalDistribution ed = empirical_summary(std::move(values), bin_count);
  ed.seed = seed;
  return ed;
}

double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double f = cdf(values[i]);
    d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
  }
  return d;
}

double ks_distance_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    double fa = static_cast<double>(i) / static_cast<double>(a.size());
    double fb = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::fabs(fa - fb));
  }
  return d;
}

double ks_critical_value(std::int64_t count, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(count));
}

double ks_critical_value_two_sample(std::int64_t n1, std::int64_t n2, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) *
         std::sqrt(static_cast<double>(n1 + n2) / (static_cast<double>(n1) * static_cast<double>(n2)));
}

}  // namespace hdlap
