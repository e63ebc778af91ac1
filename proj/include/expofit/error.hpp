#ifndef EXPOFIT_ERROR_HPP
#define EXPOFIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expofit {

/// Argument outside the domain of a model operation (bad p, non-finite x, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dataset ingestion or validation failure.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    Unreadable,
    EmptyInput,
    BadHeader,
    MalformedRow,
    NonNumeric,
    InvariantViolation,
  };

  /// `row` is the 1-based data row (header excluded); 0 when not tied to a row.
  ValidationError(Kind kind, std::size_t row, const std::string& what)
      : std::runtime_error(row == 0 ? what : what + " at row " + std::to_string(row)),
        kind_(kind),
        row_(row) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t row() const noexcept { return row_; }

 private:
  Kind kind_;
  std::size_t row_;
};

/// Data that cannot seed an estimator (e.g. all incomes equal).
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expofit

#endif  // EXPOFIT_ERROR_HPP
