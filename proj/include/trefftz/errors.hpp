#pragma once

#include <stdexcept>
#include <string>

namespace trefftz {

/// A computation produced a result that cannot be trusted (under-resolved
/// quadrature, non-finite values).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operator that has to be inverted is singular to working precision.
class SingularOperatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trefftz
