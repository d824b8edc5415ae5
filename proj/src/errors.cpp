#include "lieb/errors.hpp"

namespace lieb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "OK";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::duplicate_product: return "DUPLICATE_PRODUCT";
    case ErrorCode::unknown_label: return "UNKNOWN_LABEL";
    case ErrorCode::not_lie: return "NOT_LIE";
    case ErrorCode::not_leibniz: return "NOT_LEIBNIZ";
    case ErrorCode::no_limit: return "NO_LIMIT";
    case ErrorCode::singular: return "SINGULAR";
    case ErrorCode::singular_path: return "SINGULAR_PATH";
    case ErrorCode::pole_at_zero: return "POLE_AT_ZERO";
    case ErrorCode::zero_function: return "ZERO_FUNCTION";
    case ErrorCode::dimension_too_large: return "DIMENSION_TOO_LARGE";
    case ErrorCode::dimension_mismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::unknown_name: return "UNKNOWN_NAME";
    case ErrorCode::bad_parameter: return "BAD_PARAMETER";
    case ErrorCode::usage: return "USAGE";
    case ErrorCode::internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace lieb
