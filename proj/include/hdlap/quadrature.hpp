#pragma once

#include <functional>
#include <vector>

namespace hdlap {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  double apply(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss rule for the standard normal probability weight on R
/// (probabilists' Hermite; weights sum to 1). Exact for polynomials of
/// degree 2*points - 1.
GaussRule gauss_hermite_prob(int points);

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1],
/// total mass 2^{a+b+1} B(a+1, b+1). Requires a, b > -1.
GaussRule gauss_jacobi(int points, double a, double b);

/// Generalized Gauss-Laguerre rule for u^nu e^{-u} on (0, inf),
/// total mass Gamma(nu+1). Requires nu > -1.
GaussRule gauss_laguerre(int points, double nu);

/// Adaptive Gauss-Kronrod 15(7) with recursive bisection.
/// Stops a subinterval once its Kronrod error estimate is below
/// max(abs_tol_share, rel_tol * |whole|).
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abs_tol = 1e-10, double rel_tol = 1e-12, int max_depth = 48);

}  // namespace hdlap
