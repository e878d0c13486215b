#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2relax {

// Error categories map one-to-one onto CLI exit codes:
// usage -> 1, domain -> 2, numeric -> 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression text could not be parsed. `offset` is the byte position of the
// first offending character (equal to the source length at end-of-input).
struct ParseError : UsageError {
  std::size_t offset;
  std::string expected;
  ParseError(std::size_t offset_, std::string expected_)
      : UsageError("parse error at byte " + std::to_string(offset_) +
                   ": expected " + expected_),
        offset(offset_),
        expected(std::move(expected_)) {}
};

struct BadGrid : UsageError {
  using UsageError::UsageError;
};

// Matrix determinant is not 1 within tolerance; carries the offending value.
struct NotSpecialLinear : DomainError {
  double det_value;
  explicit NotSpecialLinear(double det)
      : DomainError("matrix is not in SL(2): det = " + std::to_string(det)),
        det_value(det) {}
};

struct NonPositiveDeterminant : DomainError {
  double det_value;
  explicit NonPositiveDeterminant(double det)
      : DomainError("determinant must be positive, got " + std::to_string(det)),
        det_value(det) {}
};

struct NegativeGap : DomainError {
  double value;
  explicit NegativeGap(double t)
      : DomainError("singular value gap must be nonnegative, got " +
                    std::to_string(t)),
        value(t) {}
};

struct NegativeGridPoint : DomainError {
  double value;
  explicit NegativeGridPoint(double t)
      : DomainError("grid point must be nonnegative, got " + std::to_string(t)),
        value(t) {}
};

struct NotEven : DomainError {
  using DomainError::DomainError;
};

struct OutsideGrid : DomainError {
  double value;
  explicit OutsideGrid(double t)
      : DomainError("argument " + std::to_string(t) +
                    " lies outside the envelope grid"),
        value(t) {}
};

// Evaluation failed (domain violation or non-finite result) at argument `at`.
struct EvalError : NumericError {
  double at;
  EvalError(const std::string& what, double t)
      : NumericError(what + " (at t = " + std::to_string(t) + ")"), at(t) {}
};

struct UnboundedBelowSuspected : NumericError {
  using NumericError::NumericError;
};

}  // namespace sl2relax
