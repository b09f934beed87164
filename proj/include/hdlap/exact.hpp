#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hdlap/graph.hpp"

namespace hdlap {

using Rational = boost::multiprecision::cpp_rational;

/// Symbol moments of a graph matrix in exact rational arithmetic. The Gram
/// matrix S = I + L/2 has half-integer entries, so 2S is an integer matrix
/// and every trace formula evaluates exactly.
struct ExactMoments {
  Rational e;
  Rational v;
  Rational z;
};

ExactMoments exact_graph_moments(const InteractionGraph& g);

/// "p/q" (or "p" for integers).
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

}  // namespace hdlap
