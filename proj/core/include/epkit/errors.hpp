#ifndef EPKIT_ERRORS_HPP
#define EPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epkit {

/// Contract violations on inputs (dimensions, ranges, malformed data).
/// Mapped to exit code 2 by the CLI.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failures of the numerics themselves (singular pivots, non-convergence,
/// structure mismatch). Mapped to exit code 3 by the CLI.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace epkit

#endif
