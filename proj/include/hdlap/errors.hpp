#pragma once

#include <stdexcept>
#include <string>

namespace hdlap {

/// Malformed input: unreadable files, bad graph data, parse failures.
/// CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input outside the domain of an operation
/// (infeasible moment pairs, wrong-side deltas, ...). CLI exit code 1.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hdlap
