#pragma once

#include <stdexcept>
#include <string>

namespace tf {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with inputs outside its contract (degenerate
/// form, wrong dimension, mode/field mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A target invariant tuple violates one of the classification conditions.
/// `condition()` is one of "condition-1", "condition-2", "condition-3",
/// "reciprocity" or "signature-dimension".
class AdmissibilityError : public PreconditionError {
 public:
  AdmissibilityError(std::string condition, const std::string& detail)
      : PreconditionError(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Integer factorization could not finish within the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tf
