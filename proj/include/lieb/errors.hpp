#ifndef LIEB_ERRORS_HPP
#define LIEB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieb {

// Every failure mode the library reports.  The numeric values are part of
// the C API and must stay in sync with lieb_status in lieb.h.
enum class ErrorCode {
  ok = 0,
  parse_error,
  duplicate_product,
  unknown_label,
  not_lie,
  not_leibniz,
  no_limit,
  singular,
  singular_path,
  pole_at_zero,
  zero_function,
  dimension_too_large,
  dimension_mismatch,
  unknown_name,
  bad_parameter,
  usage,
  internal,
};

const char* error_code_name(ErrorCode code);

// Base exception.  what() is a single machine-parsable line that starts
// with the error code name followed by key=value fields.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& locus, const std::string& message)
      : Error(ErrorCode::parse_error,
              "PARSE_ERROR locus=" + locus + " msg=\"" + message + "\""),
        locus_(locus) {}

  const std::string& locus() const { return locus_; }

private:
  std::string locus_;
};

class DuplicateProductError : public Error {
public:
  DuplicateProductError(const std::string& left, const std::string& right)
      : Error(ErrorCode::duplicate_product,
              "DUPLICATE_PRODUCT left=" + left + " right=" + right) {}
};

class UnknownLabelError : public Error {
public:
  UnknownLabelError(const std::string& label, const std::string& locus)
      : Error(ErrorCode::unknown_label,
              "UNKNOWN_LABEL label=" + label + " locus=" + locus) {}
};

class NotLieError : public Error {
public:
  NotLieError() : Error(ErrorCode::not_lie, "NOT_LIE") {}
};

class NotLeibnizError : public Error {
public:
  NotLeibnizError() : Error(ErrorCode::not_leibniz, "NOT_LEIBNIZ") {}
};

// Raised by contractions when some structure constant has no limit at
// t = 0.  Indices are 0-based in the fields, 1-based in the detail line.
class NoLimitError : public Error {
public:
  NoLimitError(std::size_t i, std::size_t j, std::size_t k, long exponent)
      : Error(ErrorCode::no_limit,
              "NO_LIMIT i=" + std::to_string(i + 1) +
                  " j=" + std::to_string(j + 1) +
                  " k=" + std::to_string(k + 1) +
                  " exponent=" + std::to_string(exponent)),
        i_(i), j_(j), k_(k), exponent_(exponent) {}

  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  long exponent() const { return exponent_; }

private:
  std::size_t i_, j_, k_;
  long exponent_;
};

class SingularError : public Error {
public:
  SingularError() : Error(ErrorCode::singular, "SINGULAR") {}
};

class SingularPathError : public Error {
public:
  SingularPathError() : Error(ErrorCode::singular_path, "SINGULAR_PATH") {}
};

class PoleAtZeroError : public Error {
public:
  explicit PoleAtZeroError(long order)
      : Error(ErrorCode::pole_at_zero,
              "POLE_AT_ZERO order=" + std::to_string(order)),
        order_(order) {}

  long order() const { return order_; }

private:
  long order_;
};

class ZeroFunctionError : public Error {
public:
  ZeroFunctionError() : Error(ErrorCode::zero_function, "ZERO_FUNCTION") {}
};

class DimensionTooLargeError : public Error {
public:
  DimensionTooLargeError(std::size_t rows, std::size_t cols,
                         std::size_t guard)
      : Error(ErrorCode::dimension_too_large,
              "DIMENSION_TOO_LARGE rows=" + std::to_string(rows) +
                  " cols=" + std::to_string(cols) +
                  " guard=" + std::to_string(guard)) {}
};

class DimensionMismatchError : public Error {
public:
  explicit DimensionMismatchError(const std::string& context)
      : Error(ErrorCode::dimension_mismatch,
              "DIMENSION_MISMATCH context=" + context) {}
};

class UnknownNameError : public Error {
public:
  explicit UnknownNameError(const std::string& name)
      : Error(ErrorCode::unknown_name, "UNKNOWN_NAME name=" + name) {}
};

class BadParameterError : public Error {
public:
  explicit BadParameterError(const std::string& message)
      : Error(ErrorCode::bad_parameter, "BAD_PARAMETER msg=\"" + message + "\"") {}
};

class InternalError : public Error {
public:
  explicit InternalError(const std::string& message)
      : Error(ErrorCode::internal, "INTERNAL msg=\"" + message + "\"") {}
};

}  // namespace lieb

#endif
