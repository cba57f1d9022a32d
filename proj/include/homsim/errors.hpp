#pragma once

#include <stdexcept>

namespace homsim {

/// Raised when a numerical invariant (norm, probability sum, ...) drifts past its
/// tolerance. Rejected inputs use std::invalid_argument instead.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homsim
