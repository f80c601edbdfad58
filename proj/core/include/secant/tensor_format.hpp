#pragma once

// Plain-text tensor files:
//
//   # comment
//   dim 7 degree 3 one_based
//   1 3 5 : 1
//   2 3 4 : -2
//
// The header gives the ambient dimension and the degree; `one_based` shifts
// every index down by one (label 1 is coordinate 0). Each term lists
// `degree` distinct indices in any order, then `:` and an integer
// coefficient; permuting the indices applies the sign of the permutation.

#include <istream>
#include <stdexcept>
#include <string>

#include "secant/extalg.hpp"

namespace secant {

class TensorFormatError : public std::runtime_error {
 public:
  TensorFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

IntMultivector read_tensor(std::istream& in);
IntMultivector parse_tensor(const std::string& text);
IntMultivector load_tensor(const std::string& path);

/// Inverse of parse_tensor; terms in colex order, indices ascending.
std::string format_tensor(const IntMultivector& w, bool one_based = false);

}  // namespace secant
