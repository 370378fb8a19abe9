#pragma once

#include <stdexcept>
#include <string>

namespace polydag {

/// Input violates a documented precondition (shape, range, malformed data).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Brute-force routines refuse inputs beyond their documented size.
class SizeLimitExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The min-plus Kleene star diverges.
class NegativeCycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration ran past its wall-clock budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polydag
