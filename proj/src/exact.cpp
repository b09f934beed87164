#include "hdlap/exact.hpp"

#include <vector>

#include "hdlap/errors.hpp"

namespace hdlap {

namespace {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

ExactMoments exact_graph_moments(const InteractionGraph& g) {
  g.validate();
  if (g.edges.empty()) throw InfeasibleError("exact_graph_moments: graph needs at least one edge");
  const std::size_t m = static_cast<std::size_t>(g.m);

  // w = 2S = 2I + L, an integer matrix.
  IntMatrix w(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) w[i][i] = 2;
  for (const auto& e : g.edges) {
    std::size_t i = static_cast<std::size_t>(e[0] - 1), j = static_cast<std::size_t>(e[1] - 1);
    w[i][i] += 1;
    w[j][j] += 1;
    w[i][j] -= 1;
    w[j][i] -= 1;
  }

  Int tr_w = 0, sum_sq = 0;
  for (std::size_t i = 0; i < m; ++i) {
    tr_w += w[i][i];
    for (std::size_t j = 0; j < m; ++j) sum_sq += w[i][j] * w[i][j];
  }
  IntMatrix w2 = multiply(w, w);
  Int tr_w3 = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) tr_w3 += w2[i][j] * w[j][i];

  const Rational a1(tr_w, 2);
  const Rational a2(sum_sq, 4);
  const Rational a3(tr_w3, 8);
  const Int n(g.n());

  ExactMoments em;
  em.e = a1 / n;
  em.v = (2 * n * a2 - 2 * a1 * a1) / Rational(n * n * (n + 2));
  em.z = (16 * a1 * a1 * a1 - 24 * n * a1 * a2 + 8 * n * n * a3) /
         Rational(n * n * n * (n + 2) * (n + 4));
  return em;
}

std::string rational_to_string(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hdlap
