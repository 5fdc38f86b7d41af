#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// Bad argument: violated precondition on an input value.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked for more work than its configured bound.
class WorkBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerically evaluated quantity failed its own consistency check
// (non-stabilized density, unexpected imaginary part, ambiguous rounding).
class NumericalCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbolic assembly left uncancelled powers of pi, zeta_8 or sqrt(m).
class IncompleteCancellation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qrep
